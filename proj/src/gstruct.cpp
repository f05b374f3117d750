#include "arimat/gstruct.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "arimat/errors.hpp"
#include "arimat/exact_linalg.hpp"

namespace arimat {

const FinAbGroup& GroupStructure::group_of(Subset s) const {
    int idx = complex.index_of(s);
    if (idx < 0) throw std::invalid_argument("face not in the complex");
    return groups[idx];
}

const GroupHom& GroupStructure::projection(Subset t, int a) const {
    int idx = complex.index_of(t);
    if (idx < 0) throw std::invalid_argument("face not in the complex");
    auto it = proj.find({idx, a});
    if (it == proj.end()) throw std::invalid_argument("missing projection map");
    return it->second;
}

void GroupStructure::set_projection(Subset t, int a, GroupHom h) {
    int idx = complex.index_of(t);
    if (idx < 0) throw std::invalid_argument("face not in the complex");
    proj.insert_or_assign({idx, a}, std::move(h));
}

namespace {

// Submatrix of X with the columns indexed by S (1-based), transposed:
// the generators of I(S) inside Z^S.
IntMatrix image_lattice_generators(const IntMatrix& X, Subset s) {
    std::vector<std::size_t> idx;
    for (int e : subset_elements(s)) idx.push_back(static_cast<std::size_t>(e - 1));
    return X.select_columns(idx).transposed();
}

std::vector<mpz_class> reduce_into_parallelepiped(const IntMatrix& spanning,
                                                  const std::vector<mpz_class>& v) {
    auto lambda = solve_rational(spanning, v);
    if (!lambda) throw std::invalid_argument("vector outside the spanned subspace");
    std::vector<mpz_class> out = v;
    for (std::size_t j = 0; j < lambda->size(); ++j) {
        mpz_class fl;
        mpz_fdiv_q(fl.get_mpz_t(), (*lambda)[j].get_num().get_mpz_t(),
                   (*lambda)[j].get_den().get_mpz_t());
        if (fl == 0) continue;
        for (std::size_t i = 0; i < out.size(); ++i) out[i] -= fl * spanning(i, j);
    }
    return out;
}

} // namespace

LayerData layer_data(const IntMatrix& X) {
    LayerData data;
    data.X = X;
    Matroid m = Matroid::from_columns(X);
    data.structure.complex = m.complex();
    const SimplicialComplex& complex = data.structure.complex;
    data.quotients.reserve(complex.faces.size());
    for (Subset s : complex.faces) {
        IntMatrix gens = image_lattice_generators(X, s);
        IntMatrix w = saturate(gens);
        data.quotients.push_back(quotient_group(w, gens));
        data.structure.groups.push_back(data.quotients.back().group);
    }
    for (int ti = 0; ti < static_cast<int>(complex.faces.size()); ++ti) {
        Subset t = complex.faces[ti];
        std::vector<int> elems = subset_elements(t);
        for (std::size_t pos = 0; pos < elems.size(); ++pos) {
            int a = elems[pos];
            Subset s = subset_without(t, a);
            const LatticeQuotient& qt = data.quotients[ti];
            const LatticeQuotient& qs = data.quotients[complex.index_of(s)];
            std::vector<GroupElem> images;
            for (std::size_t i = 0; i < qt.group.generator_count(); ++i) {
                GroupElem gen = qt.group.identity();
                gen.coords[i] = 1;
                std::vector<mpz_class> w = qt.lift(gen);
                w.erase(w.begin() + static_cast<long>(pos));
                images.push_back(qs.map_vector(w));
            }
            data.structure.set_projection(
                t, a, GroupHom::from_generator_images(qt.group, qs.group, images));
        }
    }
    return data;
}

GroupStructure layer_structure(const IntMatrix& X) { return layer_data(X).structure; }

GroupStructure cyclic_structure(const Matroid& m, const Multiplicity& mult) {
    if (!validate_weak(m, mult))
        throw NotWeaklyArithmeticError(
            "multiplicity is not weakly quasi-arithmetic: divisibility fails along "
            "an independent extension");
    GroupStructure g;
    g.complex = m.complex();
    for (Subset s : g.complex.faces) g.groups.push_back(FinAbGroup::cyclic(mult.at(s)));
    for (Subset t : g.complex.faces) {
        for (int a : subset_elements(t)) {
            Subset s = subset_without(t, a);
            const FinAbGroup& dom = g.group_of(t);
            const FinAbGroup& cod = g.group_of(s);
            std::vector<GroupElem> images;
            for (std::size_t i = 0; i < dom.generator_count(); ++i)
                images.push_back(cod.reduce(std::vector<mpz_class>(
                    cod.generator_count(), mpz_class(1))));
            g.set_projection(t, a, GroupHom::from_generator_images(dom, cod, images));
        }
    }
    return g;
}

std::string StructureIssue::to_string() const {
    std::ostringstream os;
    if (kind == Kind::NotSurjective)
        os << "projection G(" << subset_to_string(subset_with(S, a)) << ") -> G("
           << subset_to_string(S) << ") is not surjective";
    else
        os << "square at S=" << subset_to_string(S) << ", a=" << a << ", b=" << b
           << " does not commute: " << detail;
    return os.str();
}

StructureReport validate_structure(const GroupStructure& g) {
    StructureReport report;
    for (Subset t : g.complex.faces) {
        for (int a : subset_elements(t)) {
            const GroupHom& h = g.projection(t, a);
            if (!h.is_surjective()) {
                report.ok = false;
                report.issues.push_back({StructureIssue::Kind::NotSurjective,
                                         subset_without(t, a), a, 0, ""});
            }
        }
    }
    for (Subset s : g.complex.faces) {
        for (int a = 1; a <= g.complex.ground_size; ++a) {
            if (subset_contains(s, a)) continue;
            for (int b = a + 1; b <= g.complex.ground_size; ++b) {
                if (subset_contains(s, b)) continue;
                Subset sab = subset_with(subset_with(s, a), b);
                if (!g.complex.contains(sab)) continue;
                GroupHom via_a =
                    g.projection(subset_with(s, a), a)
                        .compose_after(g.projection(sab, b));
                GroupHom via_b =
                    g.projection(subset_with(s, b), b)
                        .compose_after(g.projection(sab, a));
                if (!via_a.equal_elementwise(via_b)) {
                    report.ok = false;
                    GroupElem witness = g.group_of(sab).identity();
                    for (const GroupElem& x : g.group_of(sab).elements())
                        if (!(via_a.apply(x) == via_b.apply(x))) {
                            witness = x;
                            break;
                        }
                    report.issues.push_back(
                        {StructureIssue::Kind::SquareMismatch, s, a, b,
                         "disagrees at " + witness.to_string()});
                }
            }
        }
    }
    return report;
}

GroupHom composite_projection(const GroupStructure& g, Subset s) {
    GroupHom acc = GroupHom::identity(g.group_of(s));
    Subset cur = s;
    while (cur != 0) {
        int a = subset_elements(cur).back();
        acc = g.projection(cur, a).compose_after(acc);
        cur = subset_without(cur, a);
    }
    return acc;
}

GroupElem pi_S(const GroupStructure& g, Subset s, const GroupElem& x) {
    return composite_projection(g, s).apply(x);
}

GroupStructure torsion_free_reduction(const GroupStructure& g) {
    GroupStructure out;
    out.complex = g.complex;
    std::vector<KernelData> kernels;
    kernels.reserve(g.complex.faces.size());
    for (Subset s : g.complex.faces) {
        kernels.push_back(kernel_data(composite_projection(g, s)));
        out.groups.push_back(kernels.back().group);
    }
    for (int ti = 0; ti < static_cast<int>(g.complex.faces.size()); ++ti) {
        Subset t = g.complex.faces[ti];
        for (int a : subset_elements(t)) {
            Subset s = subset_without(t, a);
            const KernelData& kt = kernels[ti];
            const KernelData& ks = kernels[g.complex.index_of(s)];
            const GroupHom& step = g.projection(t, a);
            std::vector<GroupElem> images;
            for (std::size_t i = 0; i < kt.group.generator_count(); ++i) {
                GroupElem gen = kt.group.identity();
                gen.coords[i] = 1;
                images.push_back(ks.preimage(step.apply(kt.embedding.apply(gen))));
            }
            out.set_projection(
                t, a, GroupHom::from_generator_images(kt.group, ks.group, images));
        }
    }
    return out;
}

std::vector<std::vector<mpz_class>> parallelepiped_representatives(const IntMatrix& X,
                                                                   Subset s) {
    std::vector<std::size_t> idx;
    for (int e : subset_elements(s)) idx.push_back(static_cast<std::size_t>(e - 1));
    IntMatrix cols = X.select_columns(idx);
    LatticeQuotient q = quotient_group(saturate(cols), cols);
    std::vector<std::vector<mpz_class>> points;
    for (const GroupElem& e : q.group.elements()) {
        std::vector<mpz_class> v = q.lift(e);
        if (cols.cols() == 0) {
            points.push_back(std::vector<mpz_class>(X.rows(), mpz_class(0)));
            continue;
        }
        points.push_back(reduce_into_parallelepiped(cols, v));
    }
    return points;
}

std::vector<mpz_class> parallelepiped_label(const LayerData& data, Subset s,
                                            const GroupElem& e) {
    std::vector<std::size_t> idx;
    for (int el : subset_elements(s)) idx.push_back(static_cast<std::size_t>(el - 1));
    IntMatrix cols = data.X.select_columns(idx);
    if (cols.cols() != data.X.rows())
        throw Error("parallelepiped labels need a full-rank face");
    IntMatrix image_gens = image_lattice_generators(data.X, s);
    if (!(hermite_normal_form(cols) == hermite_normal_form(image_gens)))
        throw Error("parallelepiped labels need the column lattice of X[S] to equal I(S)");
    int fi = data.structure.complex.index_of(s);
    std::vector<mpz_class> w = data.quotients[fi].lift(e);
    return reduce_into_parallelepiped(cols, w);
}

} // namespace arimat
