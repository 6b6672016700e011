#include "gdiff/gmodule.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gdiff {

namespace {

void check_shape(int rank, const std::vector<long>& k, const std::vector<unsigned>& nu) {
    if (k.size() != static_cast<size_t>(rank) || nu.size() != static_cast<size_t>(rank))
        throw std::invalid_argument("Floquet term has wrong index length for its rank");
}

}  // namespace

FloquetElement FloquetElement::constant(int rank, GaussRat c) {
    FloquetElement e(rank);
    e.add_term(std::vector<long>(rank, 0), std::vector<unsigned>(rank, 0), c);
    return e;
}

FloquetElement FloquetElement::monomial(int rank, std::vector<unsigned> nu, GaussRat c) {
    FloquetElement e(rank);
    e.add_term(std::vector<long>(rank, 0), std::move(nu), c);
    return e;
}

FloquetElement FloquetElement::harmonic(int rank, std::vector<long> k, GaussRat c) {
    FloquetElement e(rank);
    e.add_term(std::move(k), std::vector<unsigned>(rank, 0), c);
    return e;
}

FloquetElement FloquetElement::term(int rank, std::vector<long> k, std::vector<unsigned> nu,
                                    GaussRat c) {
    FloquetElement e(rank);
    e.add_term(std::move(k), std::move(nu), c);
    return e;
}

int FloquetElement::degree() const {
    int d = -1;
    for (const auto& [key, c] : terms_) {
        int t = 0;
        for (unsigned e : key.nu) t += static_cast<int>(e);
        if (t > d) d = t;
    }
    return d;
}

bool FloquetElement::is_invariant() const {
    for (const auto& [key, c] : terms_)
        for (unsigned e : key.nu)
            if (e != 0) return false;
    return true;
}

void FloquetElement::add_term(std::vector<long> k, std::vector<unsigned> nu, const GaussRat& c) {
    check_shape(rank_, k, nu);
    if (c.is_zero()) return;
    FourierKey key{std::move(k), std::move(nu)};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FloquetElement FloquetElement::operator+(const FloquetElement& o) const {
    if (rank_ != o.rank_) throw std::invalid_argument("Floquet rank mismatch in +");
    FloquetElement r = *this;
    for (const auto& [key, c] : o.terms_) r.add_term(key.k, key.nu, c);
    return r;
}

FloquetElement FloquetElement::operator-(const FloquetElement& o) const {
    if (rank_ != o.rank_) throw std::invalid_argument("Floquet rank mismatch in -");
    FloquetElement r = *this;
    for (const auto& [key, c] : o.terms_) r.add_term(key.k, key.nu, -c);
    return r;
}

FloquetElement FloquetElement::operator-() const {
    FloquetElement r(rank_);
    for (const auto& [key, c] : terms_) r.terms_.emplace(key, -c);
    return r;
}

FloquetElement FloquetElement::scaled(const GaussRat& c) const {
    FloquetElement r(rank_);
    if (c.is_zero()) return r;
    for (const auto& [key, v] : terms_) r.terms_.emplace(key, c * v);
    return r;
}

FloquetElement FloquetElement::operator*(const FloquetElement& o) const {
    if (rank_ != o.rank_) throw std::invalid_argument("Floquet rank mismatch in *");
    FloquetElement r(rank_);
    for (const auto& [ka, ca] : terms_) {
        for (const auto& [kb, cb] : o.terms_) {
            std::vector<long> k(static_cast<size_t>(rank_));
            std::vector<unsigned> nu(static_cast<size_t>(rank_));
            for (int i = 0; i < rank_; ++i) {
                k[static_cast<size_t>(i)] = ka.k[static_cast<size_t>(i)] + kb.k[static_cast<size_t>(i)];
                nu[static_cast<size_t>(i)] = ka.nu[static_cast<size_t>(i)] + kb.nu[static_cast<size_t>(i)];
            }
            r.add_term(std::move(k), std::move(nu), ca * cb);
        }
    }
    return r;
}

FloquetElement FloquetElement::shifted(const std::vector<BigInt>& g) const {
    if (g.size() != static_cast<size_t>(rank_))
        throw std::invalid_argument("shift vector has wrong length");
    FloquetElement r(rank_);
    std::vector<unsigned> mu(static_cast<size_t>(rank_));
    for (const auto& [key, c] : terms_) {
        // prod_j (x_j + g_j)^{nu_j} = sum_{mu <= nu} prod_j C(nu_j, mu_j) g_j^{nu_j - mu_j} x^mu
        mu.assign(static_cast<size_t>(rank_), 0);
        while (true) {
            BigInt mult(1);
            for (int j = 0; j < rank_; ++j) {
                unsigned nj = key.nu[static_cast<size_t>(j)];
                unsigned mj = mu[static_cast<size_t>(j)];
                if (mj < nj) {
                    mult *= binomial(nj, mj);
                    mult *= pow_int(g[static_cast<size_t>(j)], nj - mj);
                }
                if (mult == 0) break;
            }
            if (mult != 0) r.add_term(key.k, mu, mult * c);
            // next mu in the box [0, nu]
            int j = 0;
            for (; j < rank_; ++j) {
                size_t sj = static_cast<size_t>(j);
                if (mu[sj] < key.nu[sj]) {
                    ++mu[sj];
                    break;
                }
                mu[sj] = 0;
            }
            if (j == rank_) break;
        }
    }
    return r;
}

std::complex<double> FloquetElement::eval(const std::vector<double>& x) const {
    if (x.size() != static_cast<size_t>(rank_))
        throw std::invalid_argument("evaluation point has wrong dimension");
    std::complex<double> total{0.0, 0.0};
    for (const auto& [key, c] : terms_) {
        double phase = 0.0;
        double mono = 1.0;
        for (int j = 0; j < rank_; ++j) {
            size_t sj = static_cast<size_t>(j);
            phase += static_cast<double>(key.k[sj]) * x[sj];
            for (unsigned e = 0; e < key.nu[sj]; ++e) mono *= x[sj];
        }
        std::complex<double> w = std::polar(1.0, 2.0 * std::numbers::pi * phase);
        std::complex<double> coeff{c.re.get_d(), c.im.get_d()};
        total += coeff * w * mono;
    }
    return total;
}

std::string FloquetElement::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [key, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += "(" + to_string(c) + ")";
        bool any_k = false;
        for (long ki : key.k) any_k = any_k || ki != 0;
        if (any_k) {
            s += "*e(";
            for (size_t i = 0; i < key.k.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(key.k[i]);
            }
            s += ")";
        }
        for (size_t i = 0; i < key.nu.size(); ++i) {
            if (key.nu[i] == 0) continue;
            s += "*x" + std::to_string(i + 1);
            if (key.nu[i] > 1) s += "^" + std::to_string(key.nu[i]);
        }
    }
    return s;
}

void FloquetModule::check(const Element& a) const {
    if (a.rank() != rank_) throw std::invalid_argument("element rank does not match module");
}

FloquetElement FloquetModule::act(const Element& a, const GroupElement& g) const {
    check(a);
    if (!element_belongs(spec_, g))
        throw std::invalid_argument("act: group element does not belong to the module's lattice");
    return a.shifted(g.coords);
}

NumericFunction NumericModule::act(const Element& a, const GroupElement& g) const {
    if (!element_belongs(spec_, g))
        throw std::invalid_argument("act: group element does not belong to the module's lattice");
    std::vector<double> shift(static_cast<size_t>(rank_));
    for (int i = 0; i < rank_; ++i) shift[static_cast<size_t>(i)] = g.coords[static_cast<size_t>(i)].get_d();
    auto f = a.f;
    return {[f, shift](const std::vector<double>& x) {
        std::vector<double> y(x.size());
        for (size_t i = 0; i < x.size(); ++i) y[i] = x[i] + shift[i];
        return f(y);
    }};
}

NumericFunction NumericModule::add(const Element& a, const Element& b) const {
    auto fa = a.f, fb = b.f;
    return {[fa, fb](const std::vector<double>& x) { return fa(x) + fb(x); }};
}

NumericFunction NumericModule::sub(const Element& a, const Element& b) const {
    auto fa = a.f, fb = b.f;
    return {[fa, fb](const std::vector<double>& x) { return fa(x) - fb(x); }};
}

NumericFunction NumericModule::neg(const Element& a) const {
    auto fa = a.f;
    return {[fa](const std::vector<double>& x) { return -fa(x); }};
}

NumericFunction NumericModule::zero() const {
    return {[](const std::vector<double>&) { return std::complex<double>{0.0, 0.0}; }};
}

NumericFunction NumericModule::scale_int(const Element& a, long c) const {
    auto fa = a.f;
    double cd = static_cast<double>(c);
    return {[fa, cd](const std::vector<double>& x) { return cd * fa(x); }};
}

NumericFunction NumericModule::mul(const Element& a, const Element& b) const {
    auto fa = a.f, fb = b.f;
    return {[fa, fb](const std::vector<double>& x) { return fa(x) * fb(x); }};
}

std::vector<double> NumericModule::sample_point(Rng& rng) const {
    std::vector<double> x(static_cast<size_t>(rank_));
    for (auto& v : x) v = rng.uniform_real(-2.5, 2.5);
    return x;
}

double NumericModule::max_abs(const Element& a, Rng& rng, const SampleParams& p) const {
    double worst = 0.0;
    for (int i = 0; i < p.n_points; ++i) {
        double v = std::abs(a(sample_point(rng)));
        if (v > worst) worst = v;
    }
    return worst;
}

GroupFunction GroupFnModule::act(const Element& a, const GroupElement& g) const {
    if (!element_belongs(spec_, g))
        throw std::invalid_argument("act: group element does not belong to the module's group");
    auto f = a.f;
    GroupSpec spec = spec_;
    return {[f, spec, g](const GroupElement& h) { return f(multiply(spec, g, h)); }};
}

GroupFunction GroupFnModule::add(const Element& a, const Element& b) const {
    auto fa = a.f, fb = b.f;
    return {[fa, fb](const GroupElement& h) { return fa(h) + fb(h); }};
}

GroupFunction GroupFnModule::sub(const Element& a, const Element& b) const {
    auto fa = a.f, fb = b.f;
    return {[fa, fb](const GroupElement& h) { return fa(h) - fb(h); }};
}

GroupFunction GroupFnModule::neg(const Element& a) const {
    auto fa = a.f;
    return {[fa](const GroupElement& h) { return -fa(h); }};
}

GroupFunction GroupFnModule::zero() const {
    return {[](const GroupElement&) { return GaussRat(0); }};
}

GroupFunction GroupFnModule::scale_int(const Element& a, long c) const {
    auto fa = a.f;
    return {[fa, c](const GroupElement& h) { return GaussRat(c) * fa(h); }};
}

bool GroupFnModule::is_zero(const Element& a, Rng& rng, const SampleParams& p) const {
    if (!a(identity(spec_)).is_zero()) return false;
    for (int i = 0; i < p.n_rand; ++i)
        if (!a(random_element(spec_, rng, p.radius)).is_zero()) return false;
    return true;
}

GroupFunction additive_function(const GroupSpec& g, const std::vector<Rational>& free_weights,
                                const std::vector<Rational>& torsion_weights) {
    if (free_weights.size() != static_cast<size_t>(g.abelian_rank()))
        throw std::invalid_argument("additive_function: need one weight per free generator");
    for (const Rational& w : torsion_weights)
        if (w != 0)
            throw std::invalid_argument(
                "additive_function: torsion weights must vanish (no nonzero hom to Q)");
    GroupSpec spec = g;
    std::vector<Rational> w = free_weights;
    return {[spec, w](const GroupElement& h) {
        AbelianizedCoords ab = abelianize(spec, h);
        Rational total(0);
        for (size_t i = 0; i < w.size(); ++i) total += w[i] * Rational(ab.free_part[i]);
        return GaussRat(total);
    }};
}

InvarianceCert is_invariant(const FloquetModule& m, const FloquetElement& a) {
    InvarianceCert cert;
    cert.exact = true;
    cert.invariant = a.is_invariant();
    if (!cert.invariant) {
        // invariance under every generator forces invariance under the whole
        // lattice, so some generator must move a
        for (const GroupElement& g : generators(m.group())) {
            if (m.act(a, g) != a) {
                cert.witness = g;
                break;
            }
        }
    }
    return cert;
}

InvarianceCert is_invariant(const NumericModule& m, const NumericFunction& a, Rng& rng,
                            const SampleParams& p) {
    InvarianceCert cert;
    cert.exact = false;
    for (const GroupElement& g : generators(m.group())) {
        if (!m.is_zero(m.sub(m.act(a, g), a), rng, p)) {
            cert.invariant = false;
            cert.witness = g;
            return cert;
        }
    }
    for (int i = 0; i < p.n_rand; ++i) {
        GroupElement g = random_element(m.group(), rng, p.radius);
        if (!m.is_zero(m.sub(m.act(a, g), a), rng, p)) {
            cert.invariant = false;
            cert.witness = g;
            return cert;
        }
    }
    cert.invariant = true;
    return cert;
}

InvarianceCert is_invariant(const GroupFnModule& m, const GroupFunction& a, Rng& rng,
                            const SampleParams& p) {
    InvarianceCert cert;
    cert.exact = false;
    for (const GroupElement& g : generators(m.group())) {
        if (!m.is_zero(m.sub(m.act(a, g), a), rng, p)) {
            cert.invariant = false;
            cert.witness = g;
            return cert;
        }
    }
    for (int i = 0; i < p.n_rand; ++i) {
        GroupElement g = random_element(m.group(), rng, p.radius);
        if (!m.is_zero(m.sub(m.act(a, g), a), rng, p)) {
            cert.invariant = false;
            cert.witness = g;
            return cert;
        }
    }
    cert.invariant = true;
    return cert;
}

}  // namespace gdiff
