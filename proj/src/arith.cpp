#include "arimat/arith.hpp"

#include <sstream>
#include <stdexcept>

#include "arimat/errors.hpp"
#include "arimat/exact_linalg.hpp"

namespace arimat {

AmbientGroup::AmbientGroup(int free_rank_, std::vector<mpz_class> torsion_)
    : free_rank(free_rank_), torsion(std::move(torsion_)) {
    if (free_rank < 0) throw std::invalid_argument("negative free rank");
    for (std::size_t i = 0; i < torsion.size(); ++i) {
        if (torsion[i] < 1) throw std::invalid_argument("torsion factor < 1");
        if (i + 1 < torsion.size() && torsion[i + 1] % torsion[i] != 0)
            throw std::invalid_argument("torsion factors must form a divisibility chain");
    }
}

mpz_class AmbientGroup::torsion_order() const {
    mpz_class o = 1;
    for (const auto& q : torsion) o *= q;
    return o;
}

Representation::Representation(AmbientGroup g, IntMatrix cols)
    : ambient(std::move(g)), columns(std::move(cols)) {
    if (columns.cols() > 0 && columns.rows() != static_cast<std::size_t>(ambient.dim()))
        throw std::invalid_argument("column height must equal the ambient dimension");
    if (columns.cols() == 0) columns = IntMatrix(ambient.dim(), 0);
    // Reduce torsion coordinates into [0, q_i).
    for (std::size_t j = 0; j < columns.cols(); ++j)
        for (std::size_t i = 0; i < ambient.torsion.size(); ++i) {
            std::size_t row = ambient.free_rank + i;
            mpz_class r;
            mpz_fdiv_r(r.get_mpz_t(), columns(row, j).get_mpz_t(),
                       ambient.torsion[i].get_mpz_t());
            columns(row, j) = r;
        }
}

IntMatrix Representation::free_part() const {
    return columns.top_rows(ambient.free_rank);
}

IntMatrix Representation::lifted_columns(Subset a) const {
    std::vector<std::size_t> idx;
    for (int e : subset_elements(a)) idx.push_back(static_cast<std::size_t>(e - 1));
    IntMatrix sel = columns.select_columns(idx);
    IntMatrix rel(ambient.dim(), ambient.torsion.size());
    for (std::size_t i = 0; i < ambient.torsion.size(); ++i)
        rel(ambient.free_rank + i, i) = ambient.torsion[i];
    return sel.hstack(rel);
}

Matroid Representation::matroid() const { return Matroid::from_columns(free_part()); }

mpz_class Multiplicity::at(Subset s) const {
    auto it = values.find(s);
    if (it == values.end())
        throw PartialMultiplicityError("multiplicity is not defined on " +
                                       subset_to_string(s));
    return it->second;
}

Multiplicity Multiplicity::constant_one(int ground_size) {
    Multiplicity m;
    m.total = true;
    for (Subset s = 0; s < (Subset{1} << ground_size); ++s) m.values[s] = 1;
    return m;
}

mpz_class multiplicity_from_representation(const Representation& rep, Subset a) {
    return lattice_index_in_saturation(rep.lifted_columns(a));
}

Multiplicity total_multiplicity(const Representation& rep) {
    Multiplicity m;
    m.total = true;
    for (Subset s = 0; s < (Subset{1} << rep.ground_size()); ++s)
        m.values[s] = multiplicity_from_representation(rep, s);
    return m;
}

IntPolynomial2 arithmetic_tutte(const Matroid& m, const Multiplicity& mult) {
    if (!mult.total)
        throw PartialMultiplicityError(
            "the bivariate arithmetic Tutte polynomial needs a total multiplicity");
    const int n = m.ground_size();
    const int r = m.rank();
    IntPolynomial2 t;
    IntPolynomial xm1 = IntPolynomial::monomial(1, 1) - IntPolynomial(1);
    std::vector<IntPolynomial> xp(r + 1), yp(n + 1);
    xp[0] = IntPolynomial(1);
    for (int i = 1; i <= r; ++i) xp[i] = xp[i - 1] * xm1;
    yp[0] = IntPolynomial(1);
    for (int i = 1; i <= n; ++i) yp[i] = yp[i - 1] * xm1;
    for (Subset a = 0; a < (Subset{1} << n); ++a) {
        int ra = m.rank(a);
        t.add_product(mult.at(a), xp[r - ra], yp[subset_size(a) - ra]);
    }
    return t;
}

IntPolynomial arithmetic_tutte_x(const Matroid& m, const Multiplicity& mult) {
    const int r = m.rank();
    IntPolynomial xm1 = IntPolynomial::monomial(1, 1) - IntPolynomial(1);
    std::vector<IntPolynomial> xp(r + 1);
    xp[0] = IntPolynomial(1);
    for (int i = 1; i <= r; ++i) xp[i] = xp[i - 1] * xm1;
    IntPolynomial t;
    for (Subset s : m.complex().faces) {
        IntPolynomial term = xp[r - subset_size(s)];
        t = t + term * IntPolynomial(mult.at(s));
    }
    return t;
}

std::vector<Molecule> find_molecules(const Matroid& m) {
    const int n = m.ground_size();
    std::vector<Molecule> out;
    std::vector<Subset> all;
    for (Subset s = 0; s < (Subset{1} << n); ++s) all.push_back(s);
    std::sort(all.begin(), all.end(), subset_less);
    for (Subset s : all) {
        // Enumerate R ⊆ S via submask iteration, collect then sort.
        std::vector<Subset> subs;
        Subset r = s;
        while (true) {
            subs.push_back(r);
            if (r == 0) break;
            r = (r - 1) & s;
        }
        std::sort(subs.begin(), subs.end(), subset_less);
        for (Subset R : subs) {
            int rank_R = m.rank(R);
            Subset F = 0;
            for (int e : subset_elements(s & ~R))
                if (m.rank(subset_with(R, e)) == rank_R + 1) F = subset_with(F, e);
            Subset T = (s & ~R) & ~F;
            bool ok = true;
            Subset rest = s & ~R;
            Subset extra = rest;
            while (true) {
                Subset a = R | extra;
                if (m.rank(a) != rank_R + subset_size(extra & F)) {
                    ok = false;
                    break;
                }
                if (extra == 0) break;
                extra = (extra - 1) & rest;
            }
            if (ok) out.push_back(Molecule{R, s, F, T});
        }
    }
    return out;
}

namespace {

mpz_class molecule_rho(const Matroid&, const Multiplicity& mult, const Molecule& mol) {
    Subset rest = mol.S & ~mol.R;
    mpz_class sum = 0;
    Subset extra = rest;
    int sizeS = subset_size(mol.S);
    while (true) {
        Subset a = mol.R | extra;
        mpz_class term = mult.at(a);
        if ((sizeS - subset_size(a)) % 2 != 0) term = -term;
        sum += term;
        if (extra == 0) break;
        extra = (extra - 1) & rest;
    }
    if (subset_size(mol.T) % 2 != 0) sum = -sum;
    return sum;
}

} // namespace

AxiomReport check_axioms(const Matroid& m, const Multiplicity& mult) {
    if (!mult.total)
        throw PartialMultiplicityError("axiom checking needs a total multiplicity");
    AxiomReport report;
    std::vector<Molecule> molecules = find_molecules(m);
    for (const Molecule& mol : molecules) {
        mpz_class rho = molecule_rho(m, mult, mol);
        if (rho < 0) {
            report.holds_P = false;
            report.violations.push_back(
                {"P", {mol.R, mol.S}, "rho = " + rho.get_str()});
        }
        mpz_class lhs = mult.at(mol.R) * mult.at(mol.S);
        mpz_class rhs = mult.at(mol.R | mol.F) * mult.at(mol.R | mol.T);
        if (lhs != rhs) {
            report.holds_A2 = false;
            report.violations.push_back(
                {"A2", {mol.R, mol.S},
                 "m(R)m(S) = " + lhs.get_str() + " but m(R∪F)m(R∪T) = " + rhs.get_str()});
        }
    }
    const int n = m.ground_size();
    for (Subset a = 0; a < (Subset{1} << n); ++a)
        for (int e = 1; e <= n; ++e) {
            if (subset_contains(a, e)) continue;
            Subset ae = subset_with(a, e);
            bool ok;
            std::string rel;
            if (m.rank(ae) == m.rank(a)) {
                ok = mult.at(a) % mult.at(ae) == 0;
                rel = "m(A∪{e}) does not divide m(A)";
            } else {
                ok = mult.at(ae) % mult.at(a) == 0;
                rel = "m(A) does not divide m(A∪{e})";
            }
            if (!ok) {
                report.holds_A1 = false;
                report.violations.push_back({"A1", {a, ae}, rel});
            }
        }
    return report;
}

std::string AxiomReport::to_string() const {
    std::ostringstream os;
    os << "(P): " << (holds_P ? "holds" : "violated") << "\n";
    os << "(A1): " << (holds_A1 ? "holds" : "violated") << "\n";
    os << "(A2): " << (holds_A2 ? "holds" : "violated") << "\n";
    for (const AxiomViolation& v : violations) {
        os << "  (" << v.axiom << ") at";
        if (v.axiom == "A1")
            os << " A=" << subset_to_string(v.sets[0])
               << ", A∪{e}=" << subset_to_string(v.sets[1]);
        else
            os << " R=" << subset_to_string(v.sets[0])
               << ", S=" << subset_to_string(v.sets[1]);
        os << ": " << v.detail << "\n";
    }
    return os.str();
}

bool validate_weak(const Matroid& m, const Multiplicity& mult) {
    for (Subset s : m.complex().faces)
        for (int e = 1; e <= m.ground_size(); ++e) {
            if (subset_contains(s, e)) continue;
            Subset se = subset_with(s, e);
            if (!m.is_independent(se)) continue;
            if (mult.at(se) % mult.at(s) != 0) return false;
        }
    return true;
}

} // namespace arimat
