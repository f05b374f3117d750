#include "arimat/poset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "arimat/errors.hpp"

namespace arimat {

ElementSet& ElementSet::operator|=(const ElementSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
}

ElementSet ElementSet::operator&(const ElementSet& o) const {
    ElementSet r(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
    return r;
}

bool ElementSet::any() const {
    for (std::uint64_t w : words_)
        if (w) return true;
    return false;
}

std::size_t ElementSet::count() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

std::vector<int> ElementSet::to_list() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < n_; ++i)
        if (test(i)) out.push_back(static_cast<int>(i));
    return out;
}

IndPoset::IndPoset(std::vector<PosetElement> elems,
                   std::vector<std::vector<int>> covers_down)
    : elems_(std::move(elems)), down_(std::move(covers_down)) {
    up_.assign(elems_.size(), {});
    for (std::size_t i = 0; i < elems_.size(); ++i)
        for (int j : down_[i]) up_[static_cast<std::size_t>(j)].push_back(static_cast<int>(i));
    for (auto& v : up_) std::sort(v.begin(), v.end());
}

int IndPoset::find(Subset face, const GroupElem& g) const {
    PosetElement probe{face, g, subset_size(face)};
    auto cmp = [](const PosetElement& a, const PosetElement& b) {
        if (a.rho != b.rho) return a.rho < b.rho;
        if (a.face != b.face) return subset_less(a.face, b.face);
        return a.g < b.g;
    };
    auto it = std::lower_bound(elems_.begin(), elems_.end(), probe, cmp);
    if (it == elems_.end() || !(it->face == face && it->g == g)) return -1;
    return static_cast<int>(it - elems_.begin());
}

int IndPoset::rank() const {
    int r = 0;
    for (const auto& e : elems_) r = std::max(r, e.rho);
    return r;
}

std::vector<int> IndPoset::minimal_elements() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < elems_.size(); ++i)
        if (down_[i].empty()) out.push_back(static_cast<int>(i));
    return out;
}

void IndPoset::ensure_closures() const {
    if (!down_closure_.empty() || elems_.empty()) return;
    const std::size_t n = elems_.size();
    down_closure_.assign(n, ElementSet(n));
    up_closure_.assign(n, ElementSet(n));
    // Elements are sorted by rho, so a single forward pass closes downward
    // and a backward pass closes upward.
    for (std::size_t i = 0; i < n; ++i) {
        down_closure_[i].set(i);
        for (int j : down_[i]) down_closure_[i] |= down_closure_[static_cast<std::size_t>(j)];
    }
    for (std::size_t i = n; i-- > 0;) {
        up_closure_[i].set(i);
        for (int j : up_[i]) up_closure_[i] |= up_closure_[static_cast<std::size_t>(j)];
    }
}

bool IndPoset::leq(int a, int b) const {
    ensure_closures();
    return down_closure_[static_cast<std::size_t>(b)].test(static_cast<std::size_t>(a));
}

const ElementSet& IndPoset::down_set(int i) const {
    ensure_closures();
    return down_closure_[static_cast<std::size_t>(i)];
}

const ElementSet& IndPoset::up_set(int i) const {
    ensure_closures();
    return up_closure_[static_cast<std::size_t>(i)];
}

std::vector<mpz_class> IndPoset::f_vector() const {
    std::vector<mpz_class> f(rank() + 1, mpz_class(0));
    for (const auto& e : elems_) f[e.rho] += 1;
    return f;
}

IntPolynomial IndPoset::f_polynomial() const {
    std::vector<mpz_class> f = f_vector();
    int r = rank();
    IntPolynomial p;
    for (int i = 0; i <= r; ++i) p.add_term(r - i, f[i]);
    return p;
}

IntPolynomial IndPoset::h_polynomial() const {
    return f_polynomial().shifted_argument(-1);
}

std::vector<mpz_class> IndPoset::h_vector() const {
    IntPolynomial h = h_polynomial();
    int r = rank();
    std::vector<mpz_class> out(r + 1);
    for (int i = 0; i <= r; ++i) out[i] = h.coeff(r - i);
    return out;
}

IndPoset build_poset(const GroupStructure& g) {
    StructureReport report = validate_structure(g);
    if (!report.ok)
        throw InvalidStructureError("group structure is invalid: " +
                                    report.issues.front().to_string());
    const SimplicialComplex& complex = g.complex;
    std::vector<PosetElement> elems;
    std::vector<std::size_t> offset(complex.faces.size());
    std::size_t total = 0;
    for (std::size_t fi = 0; fi < complex.faces.size(); ++fi) {
        offset[fi] = total;
        total += g.groups[fi].enumerable_order();
        if (total > (1u << 22)) throw Error("poset too large to enumerate");
    }
    elems.reserve(total);
    for (std::size_t fi = 0; fi < complex.faces.size(); ++fi) {
        Subset s = complex.faces[fi];
        int rho = subset_size(s);
        for (GroupElem& e : g.groups[fi].elements())
            elems.push_back(PosetElement{s, std::move(e), rho});
    }
    std::vector<std::vector<int>> down(total);
    for (std::size_t fi = 0; fi < complex.faces.size(); ++fi) {
        Subset t = complex.faces[fi];
        if (t == 0) continue;
        for (int a : subset_elements(t)) {
            Subset s = subset_without(t, a);
            std::size_t si = static_cast<std::size_t>(complex.index_of(s));
            const GroupHom& h = g.projection(t, a);
            unsigned long long order = g.groups[fi].enumerable_order();
            for (unsigned long long k = 0; k < order; ++k) {
                GroupElem x = g.groups[fi].element_at(k);
                unsigned long long img = g.groups[si].element_index(h.apply(x));
                down[offset[fi] + k].push_back(static_cast<int>(offset[si] + img));
            }
        }
    }
    for (auto& v : down) std::sort(v.begin(), v.end());
    return IndPoset(std::move(elems), std::move(down));
}

std::vector<IndPoset> components(const IndPoset& p) {
    const std::size_t n = p.size();
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (comp[i] >= 0) continue;
        std::vector<std::size_t> stack{i};
        comp[i] = ncomp;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (int w : p.covers_down(v))
                if (comp[static_cast<std::size_t>(w)] < 0) {
                    comp[static_cast<std::size_t>(w)] = ncomp;
                    stack.push_back(static_cast<std::size_t>(w));
                }
            for (int w : p.covers_up(v))
                if (comp[static_cast<std::size_t>(w)] < 0) {
                    comp[static_cast<std::size_t>(w)] = ncomp;
                    stack.push_back(static_cast<std::size_t>(w));
                }
        }
        ++ncomp;
    }
    std::vector<std::vector<int>> members(ncomp);
    for (std::size_t i = 0; i < n; ++i) members[comp[i]].push_back(static_cast<int>(i));
    std::vector<IndPoset> out;
    for (int c = 0; c < ncomp; ++c) {
        std::vector<int> remap(n, -1);
        for (std::size_t k = 0; k < members[c].size(); ++k)
            remap[members[c][k]] = static_cast<int>(k);
        std::vector<PosetElement> elems;
        std::vector<std::vector<int>> down;
        for (int idx : members[c]) {
            elems.push_back(p.element(static_cast<std::size_t>(idx)));
            std::vector<int> d;
            for (int w : p.covers_down(static_cast<std::size_t>(idx))) d.push_back(remap[w]);
            down.push_back(std::move(d));
        }
        out.emplace_back(std::move(elems), std::move(down));
    }
    return out;
}

bool verify_simplicial(const IndPoset& p) {
    if (p.size() == 0) return false;
    if (p.minimal_elements().size() != 1)
        throw NoUniqueMinError("poset has more than one minimal element");
    for (std::size_t y = 0; y < p.size(); ++y) {
        const ElementSet& interval = p.down_set(static_cast<int>(y));
        std::vector<int> members = interval.to_list();
        int rho = p.element(y).rho;
        std::vector<int> atoms;
        for (int z : members)
            if (p.element(static_cast<std::size_t>(z)).rho == 1) atoms.push_back(z);
        if (static_cast<int>(atoms.size()) != rho) return false;
        if (members.size() != (std::size_t{1} << atoms.size())) return false;
        // Map each member to its set of atoms below; the map must be a
        // bijection onto the power set and must reflect order both ways.
        std::vector<std::uint64_t> atom_sets;
        for (int z : members) {
            std::uint64_t s = 0;
            for (std::size_t k = 0; k < atoms.size(); ++k)
                if (p.leq(atoms[k], z)) s |= std::uint64_t{1} << k;
            atom_sets.push_back(s);
        }
        std::vector<std::uint64_t> sorted = atom_sets;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t k = 0; k < sorted.size(); ++k)
            if (sorted[k] != k) return false;
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = 0; j < members.size(); ++j) {
                bool sub = (atom_sets[i] & ~atom_sets[j]) == 0;
                if (sub != p.leq(members[i], members[j])) return false;
            }
    }
    return true;
}

std::vector<int> minimal_upper_bounds(const IndPoset& p, int y1, int y2) {
    ElementSet cub = p.up_set(y1) & p.up_set(y2);
    std::vector<int> out;
    for (int z : cub.to_list()) {
        // Minimal iff nothing in the common-upper-bound set is strictly
        // below z.
        ElementSet below = cub & p.down_set(z);
        if (below.count() == 1) out.push_back(z);
    }
    return out;
}

int meet(const IndPoset& p, int y1, int y2) {
    if (!(p.up_set(y1) & p.up_set(y2)).any())
        throw NoUpperBoundError("elements have no common upper bound");
    ElementSet clb = p.down_set(y1) & p.down_set(y2);
    std::vector<int> maxima;
    for (int z : clb.to_list()) {
        ElementSet above = clb & p.up_set(z);
        if (above.count() == 1) maxima.push_back(z);
    }
    if (maxima.size() != 1)
        throw NonUniqueMeetError("meet is not unique; the poset is not simplicial");
    return maxima.front();
}

std::string element_label(const PosetElement& e) {
    return subset_to_string(e.face) + e.g.to_string();
}

std::string export_dot(const IndPoset& p) {
    std::ostringstream os;
    os << "digraph {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < p.size(); ++i)
        os << "  \"" << element_label(p.element(i)) << "\";\n";
    for (std::size_t i = 0; i < p.size(); ++i)
        for (int j : p.covers_down(i))
            os << "  \"" << element_label(p.element(static_cast<std::size_t>(j)))
               << "\" -> \"" << element_label(p.element(i)) << "\";\n";
    os << "}\n";
    return os.str();
}

std::vector<std::string> display_labels(const IndPoset& p) {
    // Face -> short name, assigned in face enumeration order.
    std::vector<Subset> faces;
    for (std::size_t i = 0; i < p.size(); ++i) faces.push_back(p.element(i).face);
    std::sort(faces.begin(), faces.end(), subset_less);
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::map<Subset, std::string> names;
    std::string multi_letters = "CDEFGHIJKLMNPQRSTUVWXYZ";
    std::size_t next_multi = 0;
    for (Subset f : faces) {
        if (f == 0) {
            names[f] = "O";
        } else if (subset_size(f) == 1) {
            names[f] = std::string(1, static_cast<char>('a' + subset_elements(f)[0] - 1));
        } else if (next_multi < multi_letters.size()) {
            names[f] = std::string(1, multi_letters[next_multi++]);
        } else {
            names[f] = "F" + std::to_string(next_multi++);
        }
    }
    std::vector<std::string> out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const PosetElement& e = p.element(i);
        std::string label = names[e.face];
        if (e.g.coords.size() == 1) {
            label += e.g.coords[0].get_str();
        } else if (e.g.coords.size() > 1) {
            label += e.g.to_string();
        }
        out.push_back(std::move(label));
    }
    return out;
}

} // namespace arimat
