#include "arimat/abelian.hpp"

#include <sstream>
#include <stdexcept>

#include "arimat/errors.hpp"

namespace arimat {

namespace {
constexpr unsigned long kEnumerationLimit = 1ul << 22;
} // namespace

std::string GroupElem::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) os << ",";
        os << coords[i];
    }
    os << ")";
    return os.str();
}

FinAbGroup::FinAbGroup(std::vector<mpz_class> factors) {
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i] < 1) throw std::invalid_argument("invariant factor < 1");
        if (i + 1 < factors.size() && factors[i + 1] % factors[i] != 0)
            throw std::invalid_argument("invariant factors must form a divisibility chain");
    }
    for (auto& f : factors)
        if (f > 1) factors_.push_back(std::move(f));
}

FinAbGroup FinAbGroup::cyclic(const mpz_class& n) {
    return FinAbGroup(std::vector<mpz_class>{n});
}

mpz_class FinAbGroup::order() const {
    mpz_class o = 1;
    for (const auto& f : factors_) o *= f;
    return o;
}

GroupElem FinAbGroup::identity() const {
    return GroupElem{std::vector<mpz_class>(factors_.size(), mpz_class(0))};
}

GroupElem FinAbGroup::reduce(std::vector<mpz_class> coords) const {
    if (coords.size() != factors_.size())
        throw std::invalid_argument("coordinate length mismatch");
    for (std::size_t i = 0; i < coords.size(); ++i) {
        mpz_class r;
        mpz_fdiv_r(r.get_mpz_t(), coords[i].get_mpz_t(), factors_[i].get_mpz_t());
        coords[i] = r;
    }
    return GroupElem{std::move(coords)};
}

GroupElem FinAbGroup::add(const GroupElem& a, const GroupElem& b) const {
    std::vector<mpz_class> c(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) c[i] = a.coords[i] + b.coords[i];
    return reduce(std::move(c));
}

GroupElem FinAbGroup::negate(const GroupElem& a) const {
    std::vector<mpz_class> c(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) c[i] = -a.coords[i];
    return reduce(std::move(c));
}

unsigned long long FinAbGroup::enumerable_order() const {
    mpz_class o = order();
    if (o > kEnumerationLimit)
        throw Error("group of order " + o.get_str() + " is too large to enumerate");
    return o.get_ui();
}

std::vector<GroupElem> FinAbGroup::elements() const {
    unsigned long long n = enumerable_order();
    std::vector<GroupElem> out;
    out.reserve(n);
    for (unsigned long long i = 0; i < n; ++i) out.push_back(element_at(i));
    return out;
}

GroupElem FinAbGroup::element_at(unsigned long long index) const {
    std::vector<mpz_class> c(factors_.size());
    for (std::size_t i = factors_.size(); i-- > 0;) {
        unsigned long long f = factors_[i].get_ui();
        c[i] = static_cast<unsigned long>(index % f);
        index /= f;
    }
    return GroupElem{std::move(c)};
}

unsigned long long FinAbGroup::element_index(const GroupElem& e) const {
    unsigned long long idx = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        idx = idx * factors_[i].get_ui() + e.coords[i].get_ui();
    }
    return idx;
}

std::string FinAbGroup::to_string() const {
    if (factors_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) os << " + ";
        os << "Z/" << factors_[i];
    }
    return os.str();
}

GroupHom::GroupHom(FinAbGroup domain, FinAbGroup codomain, IntMatrix action)
    : domain_(std::move(domain)), codomain_(std::move(codomain)),
      action_(std::move(action)) {
    const std::size_t k = domain_.generator_count();
    const std::size_t l = codomain_.generator_count();
    if (action_.rows() != l || action_.cols() != k)
        throw std::invalid_argument("hom action matrix has wrong shape");
    // Reduce entries row-wise modulo the codomain factors.
    for (std::size_t j = 0; j < l; ++j)
        for (std::size_t i = 0; i < k; ++i) {
            mpz_class r;
            mpz_fdiv_r(r.get_mpz_t(), action_(j, i).get_mpz_t(),
                       codomain_.factors()[j].get_mpz_t());
            action_(j, i) = r;
        }
    // Well-defined iff each domain relation d_i * e_i maps to zero.
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < l; ++j) {
            mpz_class v = domain_.factors()[i] * action_(j, i);
            if (v % codomain_.factors()[j] != 0)
                throw IllDefinedHomError(
                    "generator " + std::to_string(i) + " of order " +
                    domain_.factors()[i].get_str() +
                    " is not annihilated in the codomain");
        }
}

GroupHom GroupHom::from_generator_images(const FinAbGroup& domain,
                                         const FinAbGroup& codomain,
                                         const std::vector<GroupElem>& images) {
    if (images.size() != domain.generator_count())
        throw std::invalid_argument("one image per domain generator required");
    IntMatrix m(codomain.generator_count(), domain.generator_count());
    for (std::size_t i = 0; i < images.size(); ++i)
        for (std::size_t j = 0; j < codomain.generator_count(); ++j)
            m(j, i) = images[i].coords[j];
    return GroupHom(domain, codomain, std::move(m));
}

GroupHom GroupHom::identity(const FinAbGroup& g) {
    return GroupHom(g, g, IntMatrix::identity(g.generator_count()));
}

GroupHom GroupHom::zero(const FinAbGroup& domain, const FinAbGroup& codomain) {
    return GroupHom(domain, codomain,
                    IntMatrix(codomain.generator_count(), domain.generator_count()));
}

GroupElem GroupHom::apply(const GroupElem& x) const {
    return codomain_.reduce(action_.apply(x.coords));
}

GroupHom GroupHom::compose_after(const GroupHom& inner) const {
    if (!(inner.codomain_ == domain_))
        throw std::invalid_argument("hom composition domain mismatch");
    return GroupHom(inner.domain_, codomain_, action_ * inner.action_);
}

mpz_class GroupHom::image_order() const {
    // |codomain / image| is the index of the lattice spanned by the action
    // columns together with the codomain relations.
    const std::size_t l = codomain_.generator_count();
    IntMatrix rel(l, l);
    for (std::size_t j = 0; j < l; ++j) rel(j, j) = codomain_.factors()[j];
    mpz_class cokernel = lattice_index_in_saturation(action_.hstack(rel));
    return codomain_.order() / cokernel;
}

bool GroupHom::is_surjective() const {
    return image_order() == codomain_.order();
}

std::pair<FinAbGroup, GroupHom> GroupHom::kernel() const {
    KernelData kd = kernel_data(*this);
    return {kd.group, kd.embedding};
}

bool GroupHom::equal_elementwise(const GroupHom& o) const {
    if (!(domain_ == o.domain_) || !(codomain_ == o.codomain_)) return false;
    for (const GroupElem& x : domain_.elements())
        if (!(apply(x) == o.apply(x))) return false;
    return true;
}

GroupElem LatticeQuotient::map_vector(const std::vector<mpz_class>& v) const {
    auto y = solve_integer(basis, v);
    if (!y) throw std::invalid_argument("vector is not in the ambient lattice");
    std::vector<mpz_class> full = transform.apply(*y);
    std::vector<mpz_class> coords;
    coords.reserve(kept.size());
    for (std::size_t i : kept) {
        mpz_class r;
        mpz_fdiv_r(r.get_mpz_t(), full[i].get_mpz_t(), diag[i].get_mpz_t());
        coords.push_back(r);
    }
    return GroupElem{std::move(coords)};
}

std::vector<mpz_class> LatticeQuotient::lift(const GroupElem& e) const {
    std::vector<mpz_class> full(diag.size(), mpz_class(0));
    for (std::size_t i = 0; i < kept.size(); ++i) full[kept[i]] = e.coords[i];
    return basis.apply(transform_inv.apply(full));
}

LatticeQuotient quotient_group(const IntMatrix& ambient, const IntMatrix& sub) {
    if (ambient.rows() != sub.rows())
        throw std::invalid_argument("ambient/sub dimension mismatch");
    LatticeQuotient q;
    q.basis = hermite_normal_form(ambient);
    const std::size_t a = q.basis.cols();
    // Coordinates of the sub generators with respect to the ambient basis.
    IntMatrix Y(a, sub.cols());
    for (std::size_t j = 0; j < sub.cols(); ++j) {
        auto y = solve_integer(q.basis, sub.column(j));
        if (!y)
            throw std::invalid_argument(
                "sub lattice generator is not inside the ambient lattice");
        for (std::size_t i = 0; i < a; ++i) Y(i, j) = (*y)[i];
    }
    SnfDecomposition snf = smith_normal_form(Y);
    q.diag.assign(a, mpz_class(0));
    for (std::size_t i = 0; i < a; ++i) {
        if (i < std::min(snf.D.rows(), snf.D.cols())) q.diag[i] = snf.D(i, i);
        if (q.diag[i] == 0)
            throw InfiniteQuotientError("quotient by a lower-rank sublattice is infinite");
    }
    q.transform = snf.U;
    q.transform_inv = unimodular_inverse(snf.U);
    std::vector<mpz_class> raw = q.diag;
    q.group = FinAbGroup(std::move(raw));
    for (std::size_t i = 0; i < a; ++i)
        if (q.diag[i] > 1) q.kept.push_back(i);
    return q;
}

KernelData kernel_data(const GroupHom& h) {
    const std::size_t k = h.domain().generator_count();
    const std::size_t l = h.codomain().generator_count();
    // x in Z^k lies in the kernel lattice iff M x = diag(e) y for some y.
    IntMatrix rel(l, l);
    for (std::size_t j = 0; j < l; ++j) rel(j, j) = -h.codomain().factors()[j];
    IntMatrix ker = integer_kernel(h.action().hstack(rel));
    IntMatrix kgen = ker.top_rows(k);
    IntMatrix drel(k, k);
    for (std::size_t i = 0; i < k; ++i) drel(i, i) = h.domain().factors()[i];
    LatticeQuotient lq = quotient_group(kgen.hstack(drel), drel);
    std::vector<GroupElem> images;
    images.reserve(lq.group.generator_count());
    for (std::size_t i = 0; i < lq.group.generator_count(); ++i) {
        GroupElem gen = lq.group.identity();
        gen.coords[i] = 1;
        images.push_back(h.domain().reduce(lq.lift(gen)));
    }
    GroupHom embed =
        GroupHom::from_generator_images(lq.group, h.domain(), images);
    return KernelData{lq.group, std::move(embed), std::move(lq)};
}

GroupElem KernelData::preimage(const GroupElem& domain_elem) const {
    return quotient.map_vector(domain_elem.coords);
}

} // namespace arimat
