#include "qsf/algebra.hpp"

#include <bit>
#include <sstream>
#include <unordered_map>
#include <stdexcept>

namespace qsf {

int mono_fcount(Mono m) {
    return std::popcount(mono_fmask(m));
}

std::string mono_str(Mono m, int n) {
    std::ostringstream os;
    std::uint32_t fm = mono_fmask(m);
    bool any = false;
    for (int i = 1; i <= n; ++i) {
        if (fm & (1u << (2 * i - 2))) { os << (any ? " " : "") << "f+" << i; any = true; }
        if (fm & (1u << (2 * i - 1))) { os << (any ? " " : "") << "f-" << i; any = true; }
    }
    std::uint32_t e = mono_kexp(m);
    if (e) {
        os << (any ? " " : "") << "K";
        if (e > 1) os << "^" << e;
        any = true;
    }
    if (!any) os << "1";
    return os.str();
}

Cyc AlgElem::coeff(Mono m) const {
    auto it = t_.find(m);
    return it == t_.end() ? Cyc() : it->second;
}

void AlgElem::add(Mono m, const Cyc& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

AlgElem AlgElem::operator-() const {
    AlgElem r(n_);
    for (auto& [m, c] : t_) r.t_[m] = -c;
    return r;
}

AlgElem& AlgElem::operator+=(const AlgElem& o) {
    if (n_ != o.n_) throw std::invalid_argument("AlgElem: rank mismatch");
    for (auto& [m, c] : o.t_) add(m, c);
    return *this;
}

AlgElem& AlgElem::operator-=(const AlgElem& o) {
    if (n_ != o.n_) throw std::invalid_argument("AlgElem: rank mismatch");
    for (auto& [m, c] : o.t_) add(m, -c);
    return *this;
}

AlgElem AlgElem::scaled(const Cyc& c) const {
    AlgElem r(n_);
    if (c.is_zero()) return r;
    for (auto& [m, v] : t_) r.t_[m] = v * c;
    return r;
}

AlgElem mono_rmul_f(int n, Mono m, int i, int sign) {
    if (i < 1 || i > n) throw std::invalid_argument("mono_rmul_f: index out of range");
    std::uint32_t fm = mono_fmask(m);
    std::uint32_t e = mono_kexp(m);
    // Move the incoming fermion left past K^e, then past all fermions of
    // higher index; each crossing contributes a sign.
    int crossings = static_cast<int>(e) + std::popcount(fm >> (2 * i));
    Cyc s = Cyc::sign(crossings);
    std::uint32_t bplus = 1u << (2 * i - 2);
    std::uint32_t bminus = 1u << (2 * i - 1);
    bool has_p = fm & bplus, has_m = fm & bminus;
    AlgElem r(n);
    if (sign > 0) {
        if (has_p && has_m) {
            // (f+ f-) f+ = f+ e1 = 1/2 f+ - 1/2 f+ K^2  (K^2 central)
            r.add(mono_make(fm & ~bminus, e), s * Cyc::half());
            r.add(mono_make(fm & ~bminus, (e + 2) & 3u), -(s * Cyc::half()));
        } else if (has_m) {
            // f- f+ = 1/2 - 1/2 K^2 - f+ f-
            r.add(mono_make(fm & ~bminus, e), s * Cyc::half());
            r.add(mono_make(fm & ~bminus, (e + 2) & 3u), -(s * Cyc::half()));
            r.add(mono_make(fm | bplus, e), -s);
        } else if (!has_p) {
            r.add(mono_make(fm | bplus, e), s);
        }
        // f+ f+ = 0 otherwise
    } else {
        if (has_m) return r;  // f- f- = 0 inside the slot
        // lands after an f+ if present; f+ f- is already canonical
        r.add(mono_make(fm | bminus, e), s);
    }
    return r;
}

namespace {

// Right-multiply each term of x by f^sign_i, collecting into a fresh element.
AlgElem rmul_f(const AlgElem& x, int i, int sign) {
    AlgElem r(x.rank());
    for (auto& [m, c] : x.terms()) {
        AlgElem p = mono_rmul_f(x.rank(), m, i, sign);
        for (auto& [pm, pc] : p.terms()) r.add(pm, pc * c);
    }
    return r;
}

}  // namespace

AlgElem mono_mul(int n, Mono a, Mono b) {
    // Feed b's fermion factors through the slot logic one at a time; b's
    // canonical factor order is increasing bit position.
    AlgElem acc(n, a);
    std::uint32_t bf = mono_fmask(b);
    for (int bit = 0; bit < 2 * n; ++bit) {
        if (!(bf & (1u << bit))) continue;
        int i = bit / 2 + 1;
        int sign = (bit % 2 == 0) ? +1 : -1;
        acc = rmul_f(acc, i, sign);
        if (acc.is_zero()) return acc;
    }
    std::uint32_t be = mono_kexp(b);
    if (be == 0) return acc;
    AlgElem r(n);
    for (auto& [m, c] : acc.terms())
        r.add(mono_make(mono_fmask(m), (mono_kexp(m) + be) & 3u), c);
    return r;
}

namespace {

struct MonoMulCache {
    // mono_mul tables are small (4^(N+1) squared keys at most) and hot;
    // memoize per rank.
    std::unordered_map<std::uint64_t, AlgElem> memo[4];
    const AlgElem& get(int n, Mono a, Mono b) {
        auto& tbl = memo[n];
        std::uint64_t k = (static_cast<std::uint64_t>(a) << 32) | b;
        auto it = tbl.find(k);
        if (it == tbl.end()) it = tbl.emplace(k, mono_mul(n, a, b)).first;
        return it->second;
    }
};

MonoMulCache& mul_cache() {
    static thread_local MonoMulCache c;
    return c;
}

}  // namespace

AlgElem AlgElem::operator*(const AlgElem& o) const {
    if (n_ != o.n_) throw std::invalid_argument("AlgElem: rank mismatch");
    AlgElem r(n_);
    auto& cache = mul_cache();
    for (auto& [ma, ca] : t_)
        for (auto& [mb, cb] : o.t_) {
            const AlgElem& p = cache.get(n_, ma, mb);
            Cyc c = ca * cb;
            for (auto& [pm, pc] : p.terms()) r.add(pm, pc * c);
        }
    return r;
}

std::string AlgElem::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : t_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*" << mono_str(m, n_);
    }
    return os.str();
}

std::uint64_t TensorElem::key(const std::vector<Mono>& slots) {
    std::uint64_t k = 0;
    for (std::size_t s = 0; s < slots.size(); ++s)
        k |= static_cast<std::uint64_t>(slots[s]) << (16 * s);
    return k;
}

TensorElem TensorElem::one(int n, int deg) {
    TensorElem r(n, deg);
    r.add(0, Cyc(1));
    return r;
}

void TensorElem::add(std::uint64_t k, const Cyc& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

TensorElem TensorElem::operator-() const {
    TensorElem r(n_, deg_);
    for (auto& [k, c] : t_) r.t_[k] = -c;
    return r;
}

TensorElem& TensorElem::operator+=(const TensorElem& o) {
    if (n_ != o.n_ || deg_ != o.deg_)
        throw std::invalid_argument("TensorElem: rank/degree mismatch");
    for (auto& [k, c] : o.t_) add(k, c);
    return *this;
}

TensorElem& TensorElem::operator-=(const TensorElem& o) {
    if (n_ != o.n_ || deg_ != o.deg_)
        throw std::invalid_argument("TensorElem: rank/degree mismatch");
    for (auto& [k, c] : o.t_) add(k, -c);
    return *this;
}

TensorElem TensorElem::operator*(const TensorElem& o) const {
    if (n_ != o.n_ || deg_ != o.deg_)
        throw std::invalid_argument("TensorElem: rank/degree mismatch");
    TensorElem r(n_, deg_);
    auto& cache = mul_cache();
    std::vector<const AlgElem*> parts(deg_);
    for (auto& [ka, ca] : t_)
        for (auto& [kb, cb] : o.t_) {
            bool dead = false;
            for (int s = 0; s < deg_ && !dead; ++s) {
                parts[s] = &cache.get(n_, slot(ka, s), slot(kb, s));
                dead = parts[s]->is_zero();
            }
            if (dead) continue;
            // Cartesian expansion over the slotwise products.
            std::vector<std::map<Mono, Cyc>::const_iterator> its(deg_);
            for (int s = 0; s < deg_; ++s) its[s] = parts[s]->terms().begin();
            Cyc base = ca * cb;
            while (true) {
                std::uint64_t k = 0;
                Cyc c = base;
                for (int s = 0; s < deg_; ++s) {
                    k |= static_cast<std::uint64_t>(its[s]->first) << (16 * s);
                    c *= its[s]->second;
                }
                r.add(k, c);
                int s = 0;
                for (; s < deg_; ++s) {
                    if (++its[s] != parts[s]->terms().end()) break;
                    its[s] = parts[s]->terms().begin();
                }
                if (s == deg_) break;
            }
        }
    return r;
}

TensorElem TensorElem::scaled(const Cyc& c) const {
    TensorElem r(n_, deg_);
    if (c.is_zero()) return r;
    for (auto& [k, v] : t_) r.t_[k] = v * c;
    return r;
}

std::string TensorElem::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, c] : t_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*";
        for (int s = 0; s < deg_; ++s) {
            if (s) os << " (x) ";
            os << "[" << mono_str(slot(k, s), n_) << "]";
        }
    }
    return os.str();
}

TensorElem embed(const AlgElem& a, int slot, int deg) {
    TensorElem r(a.rank(), deg);
    for (auto& [m, c] : a.terms())
        r.add(static_cast<std::uint64_t>(m) << (16 * slot), c);
    return r;
}

TensorElem outer(const std::vector<AlgElem>& legs) {
    TensorElem r = embed(legs[0], 0, static_cast<int>(legs.size()));
    for (std::size_t s = 1; s < legs.size(); ++s)
        r = r * embed(legs[s], static_cast<int>(s), static_cast<int>(legs.size()));
    return r;
}

TensorElem permute(const TensorElem& x, const std::vector<int>& perm) {
    TensorElem r(x.rank(), x.degree());
    for (auto& [k, c] : x.terms()) {
        std::uint64_t nk = 0;
        for (int s = 0; s < x.degree(); ++s)
            nk |= static_cast<std::uint64_t>(TensorElem::slot(k, s)) << (16 * perm[s]);
        r.add(nk, c);
    }
    return r;
}

AlgElem to_alg(const TensorElem& x) {
    if (x.degree() != 1) throw std::invalid_argument("to_alg: degree must be 1");
    AlgElem r(x.rank());
    for (auto& [k, c] : x.terms()) r.add(TensorElem::slot(k, 0), c);
    return r;
}

TensorElem map_slot(const TensorElem& x, int slot, int outdeg,
                    const std::function<const TensorElem&(Mono)>& image) {
    int d = x.degree();
    TensorElem r(x.rank(), d - 1 + outdeg);
    for (auto& [k, c] : x.terms()) {
        const TensorElem& img = image(TensorElem::slot(k, slot));
        for (auto& [ik, ic] : img.terms()) {
            std::uint64_t nk = 0;
            int pos = 0;
            for (int s = 0; s < slot; ++s)
                nk |= static_cast<std::uint64_t>(TensorElem::slot(k, s)) << (16 * pos++);
            for (int s = 0; s < outdeg; ++s)
                nk |= static_cast<std::uint64_t>(TensorElem::slot(ik, s)) << (16 * pos++);
            for (int s = slot + 1; s < d; ++s)
                nk |= static_cast<std::uint64_t>(TensorElem::slot(k, s)) << (16 * pos++);
            r.add(nk, c * ic);
        }
    }
    return r;
}

}  // namespace qsf
