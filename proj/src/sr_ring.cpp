#include "arimat/sr_ring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "arimat/errors.hpp"

namespace arimat {

Monomial Monomial::times(const Monomial& o) const {
    Monomial r;
    auto a = factors.begin(), b = o.factors.begin();
    while (a != factors.end() && b != o.factors.end()) {
        if (a->first < b->first)
            r.factors.push_back(*a++);
        else if (b->first < a->first)
            r.factors.push_back(*b++);
        else {
            r.factors.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    r.factors.insert(r.factors.end(), a, factors.end());
    r.factors.insert(r.factors.end(), b, o.factors.end());
    return r;
}

Monomial Monomial::times_var(int v) const { return times(Monomial::variable(v)); }

long Monomial::weighted_degree(const std::vector<int>& weight) const {
    long d = 0;
    for (const auto& [v, e] : factors) d += static_cast<long>(weight[v]) * e;
    return d;
}

void FormalPolynomial::add_term(const Monomial& m, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

SRIdeal sr_ideal(const IndPoset& p) {
    if (!verify_simplicial(p))
        throw NotSimplicialError("poset is not simplicial");
    SRIdeal ideal;
    ideal.poset = &p;
    ideal.zero_index = 0;
    ideal.degree.resize(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        ideal.degree[i] = p.element(i).rho;

    const int n = static_cast<int>(p.size());
    std::vector<SRGenerator> s2;
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool has_ub = (p.up_set(i) & p.up_set(j)).any();
            if (!has_ub) {
                SRGenerator g{GenKind::S1, i, j, {}};
                g.poly.add_term(Monomial::variable(i).times_var(j), 1);
                ideal.generators.push_back(std::move(g));
                continue;
            }
            if (p.leq(i, j) || p.leq(j, i)) continue; // relation is identically zero
            int m = meet(p, i, j);
            SRGenerator g{GenKind::S2, i, j, {}};
            g.poly.add_term(Monomial::variable(i).times_var(j), 1);
            for (int z : minimal_upper_bounds(p, i, j))
                g.poly.add_term(Monomial::variable(m).times_var(z), -1);
            s2.push_back(std::move(g));
        }
    for (auto& g : s2) ideal.generators.push_back(std::move(g));
    SRGenerator s3{GenKind::S3, -1, -1, {}};
    s3.poly.add_term(Monomial::variable(ideal.zero_index), 1);
    s3.poly.add_term(Monomial::one(), -1);
    ideal.generators.push_back(std::move(s3));

    for (const SRGenerator& g : ideal.generators) {
        long d = g.poly.terms.begin()->first.weighted_degree(ideal.degree);
        for (const auto& [mono, c] : g.poly.terms)
            if (mono.weighted_degree(ideal.degree) != d)
                throw Error("generator is not homogeneous under the rho grading");
    }
    return ideal;
}

namespace {

// Sparse row over Q, kept sorted by column.
using SparseRow = std::vector<std::pair<int, mpq_class>>;

void subtract_scaled(SparseRow& row, const mpq_class& f, const SparseRow& pivot) {
    SparseRow out;
    out.reserve(row.size() + pivot.size());
    auto a = row.begin();
    auto b = pivot.begin();
    while (a != row.end() && b != pivot.end()) {
        if (a->first < b->first) {
            out.push_back(*a++);
        } else if (b->first < a->first) {
            out.emplace_back(b->first, -f * b->second);
            ++b;
        } else {
            mpq_class v = a->second - f * b->second;
            if (v != 0) out.emplace_back(a->first, std::move(v));
            ++a;
            ++b;
        }
    }
    out.insert(out.end(), a, row.end());
    for (; b != pivot.end(); ++b) out.emplace_back(b->first, -f * b->second);
    row = std::move(out);
}

struct OracleWorkspace {
    const SRIdeal& ideal;
    int d;
    std::vector<int> vars;                       // positive-degree variables
    std::vector<std::vector<bool>> compatible;   // indexed by poset element
    std::vector<Monomial> alive;                 // sorted in column order
    std::map<Monomial, int> column;

    explicit OracleWorkspace(const SRIdeal& ideal_, int d_)
        : ideal(ideal_), d(d_) {
        const int n = static_cast<int>(ideal.degree.size());
        for (int v = 0; v < n; ++v)
            if (ideal.degree[v] > 0) vars.push_back(v);
        compatible.assign(n, std::vector<bool>(n, true));
        for (const SRGenerator& g : ideal.generators)
            if (g.kind == GenKind::S1) {
                compatible[g.yi][g.yj] = false;
                compatible[g.yj][g.yi] = false;
            }
    }

    bool is_alive(const Monomial& m) const {
        for (std::size_t a = 0; a < m.factors.size(); ++a)
            for (std::size_t b = a + 1; b < m.factors.size(); ++b)
                if (!compatible[m.factors[a].first][m.factors[b].first]) return false;
        return true;
    }

    // All monomials of weighted degree `target` whose support is pairwise
    // compatible and drawn from candidates[from..].
    void enumerate(const std::vector<int>& candidates, std::size_t from, int target,
                   Monomial& current, std::vector<Monomial>& out) const {
        if (target == 0) {
            out.push_back(current);
            return;
        }
        for (std::size_t k = from; k < candidates.size(); ++k) {
            int v = candidates[k];
            if (ideal.degree[v] > target) continue;
            bool ok = true;
            for (const auto& [w, e] : current.factors)
                if (!compatible[v][w]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            for (int e = 1; e * ideal.degree[v] <= target; ++e) {
                Monomial next = current;
                next.factors.emplace_back(v, e);
                enumerate(candidates, k + 1, target - e * ideal.degree[v], next, out);
            }
        }
    }

    void build_columns() {
        Monomial empty;
        enumerate(vars, 0, d, empty, alive);
        // Column order: multiset of variable degrees sorted descending,
        // compared ascending, so a straightening product's y_i y_j term
        // leads its row.
        auto key = [&](const Monomial& m) {
            std::vector<int> ranks;
            for (const auto& [v, e] : m.factors)
                ranks.insert(ranks.end(), e, ideal.degree[v]);
            std::sort(ranks.rbegin(), ranks.rend());
            return ranks;
        };
        std::stable_sort(alive.begin(), alive.end(),
                         [&](const Monomial& a, const Monomial& b) {
                             auto ka = key(a), kb = key(b);
                             if (ka != kb) return ka < kb;
                             return a < b;
                         });
        for (std::size_t i = 0; i < alive.size(); ++i)
            column[alive[i]] = static_cast<int>(i);
    }
};

} // namespace

mpz_class hilbert_oracle(const SRIdeal& ideal, int d) {
    if (d < 0) throw std::invalid_argument("negative degree");
    OracleWorkspace ws(ideal, d);
    ws.build_columns();

    // Products of S1 generators are single monomials and span exactly the
    // coordinate subspace of monomials divisible by an S1 pair, so the
    // total rank is (#monomials - #alive) plus the rank of the S2 products
    // projected onto the alive coordinates.
    std::size_t rank = 0;
    std::map<int, SparseRow> pivots;
    for (const SRGenerator& g : ideal.generators) {
        if (g.kind != GenKind::S2) continue;
        long gdeg = static_cast<long>(ideal.degree[g.yi]) + ideal.degree[g.yj];
        if (gdeg > d) continue;
        std::vector<int> candidates;
        for (int v : ws.vars)
            if (ws.compatible[v][g.yi] && ws.compatible[v][g.yj]) candidates.push_back(v);
        std::vector<Monomial> multipliers;
        Monomial empty;
        ws.enumerate(candidates, 0, d - static_cast<int>(gdeg), empty, multipliers);
        for (const Monomial& mu : multipliers) {
            SparseRow row;
            for (const auto& [mono, c] : g.poly.terms) {
                Monomial term = mu.times(mono);
                // y_0 = 1 substitution: drop degree-0 variables.
                Monomial sub;
                for (const auto& [v, e] : term.factors)
                    if (ideal.degree[v] > 0) sub.factors.emplace_back(v, e);
                if (!ws.is_alive(sub)) continue;
                auto it = ws.column.find(sub);
                if (it == ws.column.end())
                    throw Error("oracle internal error: alive monomial not indexed");
                row.emplace_back(it->second, mpq_class(c));
            }
            std::sort(row.begin(), row.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            // Merge duplicate columns (cannot normally occur; defensive).
            SparseRow merged;
            for (auto& [col, v] : row) {
                if (!merged.empty() && merged.back().first == col)
                    merged.back().second += v;
                else
                    merged.emplace_back(col, std::move(v));
            }
            merged.erase(std::remove_if(merged.begin(), merged.end(),
                                        [](const auto& t) { return t.second == 0; }),
                         merged.end());
            row = std::move(merged);
            while (!row.empty()) {
                int lead = row.front().first;
                auto pit = pivots.find(lead);
                if (pit == pivots.end()) {
                    mpq_class inv = 1 / row.front().second;
                    for (auto& [col, v] : row) v *= inv;
                    pivots.emplace(lead, std::move(row));
                    ++rank;
                    break;
                }
                subtract_scaled(row, row.front().second, pit->second);
            }
        }
    }
    return mpz_class(static_cast<unsigned long>(ws.alive.size() - rank));
}

std::pair<std::vector<mpz_class>, int> hilbert_closed(const IndPoset& p) {
    return {p.h_vector(), p.rank()};
}

bool verify_hilbert(const IndPoset& p, int max_degree) {
    SRIdeal ideal = sr_ideal(p);
    auto [h, r] = hilbert_closed(p);
    for (int d = 0; d <= max_degree; ++d)
        if (hilbert_oracle(ideal, d) != hilbert_series_coeff(h, r, d)) return false;
    return true;
}

bool verify_hilbert(const IndPoset& p) { return verify_hilbert(p, p.rank() + 3); }

bool verify_hilbert_scaled(const IndPoset& reduced, const std::vector<mpz_class>& h,
                           int r, const mpz_class& c, int max_degree) {
    SRIdeal ideal = sr_ideal(reduced);
    for (int d = 0; d <= max_degree; ++d) {
        mpz_class num = hilbert_series_coeff(h, r, d);
        if (num % c != 0) return false;
        if (hilbert_oracle(ideal, d) != num / c) return false;
    }
    return true;
}

std::string render_ideal(const SRIdeal& ideal, const std::vector<std::string>& labels) {
    std::ostringstream os;
    for (const SRGenerator& g : ideal.generators) {
        // Terms: nonconstant monomials in ascending variable order (after
        // dropping degree-0 variables, which print as 1), constant term last.
        std::vector<std::pair<Monomial, mpz_class>> terms(g.poly.terms.begin(),
                                                          g.poly.terms.end());
        auto visible = [&](const Monomial& m) {
            Monomial v;
            for (const auto& [var, e] : m.factors)
                if (ideal.degree[var] > 0) v.factors.emplace_back(var, e);
            return v;
        };
        std::stable_sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
            if (a.first.factors.empty() != b.first.factors.empty())
                return b.first.factors.empty();
            return visible(a.first) < visible(b.first);
        });
        bool first = true;
        for (const auto& [mono, c] : terms) {
            std::string body;
            for (const auto& [v, e] : mono.factors) {
                if (ideal.degree[v] == 0 && mono.factors.size() > 1) continue;
                if (!body.empty()) body += "*";
                body += labels[static_cast<std::size_t>(v)];
                if (e > 1) body += "^" + std::to_string(e);
            }
            mpz_class a = abs(c);
            if (first) {
                if (c < 0) os << "-";
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            if (a != 1 || body.empty()) {
                os << a.get_str();
                if (!body.empty()) os << "*";
            }
            os << body;
            first = false;
        }
        os << "\n";
    }
    return os.str();
}

} // namespace arimat
