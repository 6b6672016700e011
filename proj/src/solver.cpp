#include "gdiff/solver.hpp"

#include <functional>
#include <stdexcept>

#include "gdiff/floquet.hpp"

namespace gdiff {

namespace {

long int_pow_l(long base, int e) {
    long r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

long mod_cell(long v, long n) {
    long r = v % n;
    return r < 0 ? r + n : r;
}

// row-major cell index of x mod N
long cell_index(const std::vector<long>& x, long period) {
    long idx = 0;
    for (long c : x) idx = idx * period + mod_cell(c, period);
    return idx;
}

std::vector<long> cell_coords(long idx, int rank, long period) {
    std::vector<long> c(static_cast<size_t>(rank), 0);
    for (int i = rank - 1; i >= 0; --i) {
        c[static_cast<size_t>(i)] = idx % period;
        idx /= period;
    }
    return c;
}

// all nu with |nu|_1 <= max_degree, ordered by (|nu|_1, lex)
std::vector<std::vector<unsigned>> ansatz_exponents(int rank, int max_degree) {
    std::vector<std::vector<unsigned>> all;
    for (int d = 0; d <= max_degree; ++d)
        for (auto& nu : exponents_of_degree(rank, d)) all.push_back(nu);
    return all;
}

// multiplier of x^mu in the binomial expansion of (x + o)^nu
Rational shift_coefficient(const std::vector<unsigned>& nu, const std::vector<unsigned>& mu,
                           const std::vector<long>& o) {
    BigInt m(1);
    for (size_t j = 0; j < nu.size(); ++j) {
        if (mu[j] > nu[j]) return Rational(0);
        m *= binomial(nu[j], mu[j]);
        m *= pow_int(BigInt(o[j]), nu[j] - mu[j]);
        if (m == 0) return Rational(0);
    }
    return Rational(m);
}

// every mu <= nu componentwise
std::vector<std::vector<unsigned>> sub_exponents(const std::vector<unsigned>& nu) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> mu(nu.size(), 0);
    std::function<void(size_t)> fill = [&](size_t pos) {
        if (pos == nu.size()) {
            out.push_back(mu);
            return;
        }
        for (unsigned v = 0; v <= nu[pos]; ++v) {
            mu[pos] = v;
            fill(pos + 1);
        }
        mu[pos] = 0;
    };
    fill(0);
    return out;
}

}  // namespace

long StencilOperator::cells() const { return int_pow_l(period, rank); }

void StencilOperator::validate() const {
    if (rank < 1) throw std::invalid_argument("stencil rank must be >= 1");
    if (period < 1) throw std::invalid_argument("stencil period must be >= 1");
    const size_t nc = static_cast<size_t>(cells());
    for (const auto& [offset, table] : stencil) {
        if (offset.size() != static_cast<size_t>(rank))
            throw std::invalid_argument("stencil offset has wrong dimension");
        if (table.size() != nc)
            throw std::invalid_argument("stencil coefficient table has wrong size");
    }
}

int PolyAnsatz::degree() const {
    int d = -1;
    for (const auto& [nu, table] : coeff) {
        bool nonzero = false;
        for (const auto& q : table) nonzero = nonzero || q != 0;
        if (!nonzero) continue;
        int t = 0;
        for (unsigned e : nu) t += static_cast<int>(e);
        if (t > d) d = t;
    }
    return d;
}

bool PolyAnsatz::is_zero() const { return degree() < 0; }

void PolyAnsatz::prune() {
    std::erase_if(coeff, [](const auto& kv) {
        for (const auto& q : kv.second)
            if (q != 0) return false;
        return true;
    });
}

Rational PolyAnsatz::eval(const std::vector<long>& x) const {
    if (x.size() != static_cast<size_t>(rank))
        throw std::invalid_argument("evaluation point has wrong dimension");
    Rational total(0);
    long cell = cell_index(x, period);
    for (const auto& [nu, table] : coeff) {
        Rational mono(1);
        for (size_t j = 0; j < nu.size(); ++j)
            mono *= Rational(pow_int(BigInt(x[j]), nu[j]));
        total += table[static_cast<size_t>(cell)] * mono;
    }
    return total;
}

PolyAnsatz apply(const StencilOperator& D, const PolyAnsatz& u) {
    D.validate();
    if (u.rank != D.rank || u.period != D.period)
        throw std::invalid_argument("operator and ansatz have mismatched rank or period");
    const long nc = D.cells();
    PolyAnsatz out;
    out.rank = u.rank;
    out.period = u.period;
    for (const auto& [offset, ctable] : D.stencil) {
        for (const auto& [nu, atable] : u.coeff) {
            for (const auto& mu : sub_exponents(nu)) {
                Rational sc = shift_coefficient(nu, mu, offset);
                if (sc == 0) continue;
                auto [it, inserted] =
                    out.coeff.try_emplace(mu, std::vector<Rational>(static_cast<size_t>(nc), Rational(0)));
                auto& btable = it->second;
                for (long j = 0; j < nc; ++j) {
                    std::vector<long> xc = cell_coords(j, D.rank, D.period);
                    for (size_t i = 0; i < xc.size(); ++i) xc[i] += offset[i];
                    btable[static_cast<size_t>(j)] +=
                        ctable[static_cast<size_t>(j)] * sc * atable[static_cast<size_t>(cell_index(xc, D.period))];
                }
            }
        }
    }
    out.prune();
    return out;
}

PolyAnsatz translate(const PolyAnsatz& u, const std::vector<long>& t) {
    if (t.size() != static_cast<size_t>(u.rank))
        throw std::invalid_argument("translation vector has wrong dimension");
    const long nc = int_pow_l(u.period, u.rank);
    PolyAnsatz out;
    out.rank = u.rank;
    out.period = u.period;
    for (const auto& [nu, atable] : u.coeff) {
        for (const auto& mu : sub_exponents(nu)) {
            Rational sc = shift_coefficient(nu, mu, t);
            if (sc == 0) continue;
            auto [it, inserted] =
                out.coeff.try_emplace(mu, std::vector<Rational>(static_cast<size_t>(nc), Rational(0)));
            auto& btable = it->second;
            for (long j = 0; j < nc; ++j) {
                std::vector<long> xc = cell_coords(j, u.rank, u.period);
                for (size_t i = 0; i < xc.size(); ++i) xc[i] += t[i];
                btable[static_cast<size_t>(j)] +=
                    sc * atable[static_cast<size_t>(cell_index(xc, u.period))];
            }
        }
    }
    out.prune();
    return out;
}

StencilOperator double_period(const StencilOperator& D) {
    D.validate();
    StencilOperator out;
    out.rank = D.rank;
    out.period = 2 * D.period;
    const long nc = out.cells();
    for (const auto& [offset, table] : D.stencil) {
        std::vector<Rational> big(static_cast<size_t>(nc), Rational(0));
        for (long j = 0; j < nc; ++j) {
            std::vector<long> xc = cell_coords(j, out.rank, out.period);
            big[static_cast<size_t>(j)] = table[static_cast<size_t>(cell_index(xc, D.period))];
        }
        out.stencil.emplace(offset, std::move(big));
    }
    return out;
}

KernelResult polynomial_kernel(const StencilOperator& D, int max_degree) {
    D.validate();
    if (max_degree < 0) throw std::invalid_argument("max_degree must be >= 0");
    const long nc = D.cells();
    const auto exps = ansatz_exponents(D.rank, max_degree);
    const long unknowns = static_cast<long>(exps.size()) * nc;

    std::map<std::vector<unsigned>, long> exp_base;
    for (size_t i = 0; i < exps.size(); ++i) exp_base[exps[i]] = static_cast<long>(i) * nc;

    // rows: coefficient of x^mu at cell j in D(u), one per (mu, j)
    QMatrix rows(static_cast<size_t>(unknowns),
                 QRow(static_cast<size_t>(unknowns), Rational(0)));
    for (const auto& [offset, ctable] : D.stencil) {
        for (const auto& nu : exps) {
            for (const auto& mu : sub_exponents(nu)) {
                Rational sc = shift_coefficient(nu, mu, offset);
                if (sc == 0) continue;
                long row_base = exp_base.at(mu);
                long col_base = exp_base.at(nu);
                for (long j = 0; j < nc; ++j) {
                    std::vector<long> xc = cell_coords(j, D.rank, D.period);
                    for (size_t i = 0; i < xc.size(); ++i) xc[i] += offset[i];
                    long src = cell_index(xc, D.period);
                    rows[static_cast<size_t>(row_base + j)][static_cast<size_t>(col_base + src)] +=
                        ctable[static_cast<size_t>(j)] * sc;
                }
            }
        }
    }

    KernelResult out;
    out.unknowns = unknowns;
    out.equations = unknowns;
    QMatrix basis = nullspace_basis(std::move(rows), static_cast<int>(unknowns));
    out.dim = static_cast<int>(basis.size());
    for (const auto& vec : basis) {
        PolyAnsatz u;
        u.rank = D.rank;
        u.period = D.period;
        for (size_t i = 0; i < exps.size(); ++i) {
            std::vector<Rational> table(vec.begin() + static_cast<long>(i) * nc,
                                        vec.begin() + static_cast<long>(i + 1) * nc);
            u.coeff.emplace(exps[i], std::move(table));
        }
        u.prune();
        out.basis.push_back(std::move(u));
    }
    return out;
}

namespace {

QRow flatten_ansatz(const PolyAnsatz& u, const std::vector<std::vector<unsigned>>& exps, long nc) {
    QRow v(exps.size() * static_cast<size_t>(nc), Rational(0));
    for (size_t i = 0; i < exps.size(); ++i) {
        auto it = u.coeff.find(exps[i]);
        if (it == u.coeff.end()) continue;
        for (long j = 0; j < nc; ++j)
            v[i * static_cast<size_t>(nc) + static_cast<size_t>(j)] = it->second[static_cast<size_t>(j)];
    }
    return v;
}

}  // namespace

bool in_kernel_span(const KernelResult& kernel, const PolyAnsatz& u) {
    if (kernel.basis.empty()) return u.is_zero();
    const PolyAnsatz& first = kernel.basis.front();
    int max_deg = 0;
    for (const auto& b : kernel.basis) max_deg = std::max(max_deg, b.degree());
    max_deg = std::max(max_deg, u.degree());
    const auto exps = ansatz_exponents(first.rank, std::max(max_deg, 0));
    const long nc = int_pow_l(first.period, first.rank);
    QMatrix rows;
    for (const auto& b : kernel.basis) rows.push_back(flatten_ansatz(b, exps, nc));
    rref_in_place(rows);
    return in_row_span(rows, flatten_ansatz(u, exps, nc));
}

BoundReport check_bound(const StencilOperator& D, int n) {
    BoundReport rep;
    rep.n = n;
    long prev = 0;
    rep.ok = true;
    for (int k = 0; k <= n; ++k) {
        long d = polynomial_kernel(D, k).dim;
        if (k > 0 && d < prev) rep.ok = false;
        rep.dims.push_back(d);
        prev = d;
    }
    rep.s = rep.dims.front();
    BigInt b = binomial(static_cast<unsigned long>(n + D.rank), static_cast<unsigned long>(D.rank));
    rep.bound = rep.s * b.get_si();
    rep.slack = rep.bound - rep.dims.back();
    if (rep.dims.back() > rep.bound) rep.ok = false;
    return rep;
}

}  // namespace gdiff
