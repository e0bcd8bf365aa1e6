#include "qsf/modules.hpp"

#include <sstream>
#include <stdexcept>

namespace qsf {

namespace {

SparseVec to_sparse(const AlgElem& a) {
    SparseVec v;
    for (auto& [m, c] : a.terms()) v[m] = c;
    return v;
}

}  // namespace

DenseMat ModuleRep::act_mono(Mono m) const {
    DenseMat acc;
    bool first = true;
    std::uint32_t fm = mono_fmask(m);
    for (int bit = 0; bit < 2 * n_; ++bit) {
        if (!(fm & (1u << bit))) continue;
        const DenseMat& g = gen_[1 + bit];
        acc = first ? g : acc * g;
        first = false;
    }
    for (std::uint32_t j = 0; j < mono_kexp(m); ++j) {
        acc = first ? gen_[0] : acc * gen_[0];
        first = false;
    }
    return first ? DenseMat::identity(dim()) : acc;
}

DenseMat ModuleRep::act(const AlgElem& a) const {
    DenseMat out(dim(), dim());
    for (auto& [m, c] : a.terms()) {
        DenseMat mm = act_mono(m);
        for (int i = 0; i < dim(); ++i)
            for (int j = 0; j < dim(); ++j) {
                const Cyc& v = mm.at(i, j);
                if (!v.is_zero()) out.at(i, j) += v * c;
            }
    }
    return out;
}

Cyc ModuleRep::trace(const AlgElem& a) const {
    if (trace_table_.empty())
        trace_table_.resize(static_cast<std::size_t>(1) << (2 * n_ + 2));
    Cyc out;
    for (auto& [m, c] : a.terms()) {
        auto& slot = trace_table_[m];
        if (!slot) {
            DenseMat mat = act_mono(m);
            Cyc t;
            for (int i = 0; i < dim(); ++i) t += mat.at(i, i);
            slot = std::make_unique<Cyc>(t);
        }
        out += *slot * c;
    }
    return out;
}

long ModuleRep::relation_violations() const {
    long bad = 0;
    const DenseMat& K = gen_[0];
    DenseMat id = DenseMat::identity(dim());
    DenseMat K2 = K * K;
    if (!(K2 * K2 - id).is_zero()) ++bad;
    // e1 acts as (1 - K^2)/2
    DenseMat e1 = DenseMat(dim(), dim());
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j)
            e1.at(i, j) = ((i == j ? Cyc(1) : Cyc()) - K2.at(i, j)) * Cyc::half();
    for (int a = 1; a <= 2 * n_; ++a) {
        const DenseMat& fa = gen_[a];
        if (!(fa * K + K * fa).is_zero()) ++bad;
        for (int b = 1; b <= 2 * n_; ++b) {
            const DenseMat& fb = gen_[b];
            DenseMat anti = fa * fb + fb * fa;
            bool mixed = ((a + 1) / 2 == (b + 1) / 2) && (a % 2 != b % 2);
            if (mixed) {
                if (!(anti - e1).is_zero()) ++bad;
            } else if (!anti.is_zero()) {
                ++bad;
            }
        }
    }
    return bad;
}

ModuleRep build_module(const StructureSet& s, const std::string& label) {
    const int n = s.cfg.n;
    ModuleRep V;
    V.label_ = label;
    V.n_ = n;

    if (label == "X0+" || label == "X0-") {
        // one-dimensional: K acts by +-1, fermions by 0
        V.basis_.push_back(AlgElem::one(n));  // formal placeholder vector
        DenseMat K(1, 1);
        K.at(0, 0) = Cyc(label == "X0+" ? 1 : -1);
        V.gen_.push_back(K);
        for (int a = 0; a < 2 * n; ++a) V.gen_.push_back(DenseMat(1, 1));
        return V;
    }

    // concrete bases inside Q for the other modules
    if (label == "X1+" || label == "X1-") {
        const AlgElem& idem = (label == "X1+") ? s.e1_plus : s.e1_minus;
        AlgElem seed = idem;
        for (int i = n; i >= 1; --i) seed = AlgElem(n, mono_f(i, -1)) * seed;
        // the stated basis prod_k (f+_k)^{i_k} . seed, masks ascending
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            AlgElem b = seed;
            for (int k = n; k >= 1; --k)
                if (mask & (1u << (k - 1))) b = AlgElem(n, mono_f(k, +1)) * b;
            V.basis_.push_back(b);
        }
    } else if (label == "P0+" || label == "P0-") {
        const AlgElem& idem = (label == "P0+") ? s.e0_plus : s.e0_minus;
        for (std::uint32_t mask = 0; mask < (1u << (2 * n)); ++mask)
            V.basis_.push_back(AlgElem(n, mono_make(mask, 0)) * idem);
    } else if (label == "regular") {
        for (Mono m : all_monomials(n)) V.basis_.push_back(AlgElem(n, m));
    } else {
        throw std::invalid_argument("build_module: unknown label " + label);
    }

    Echelon ech;
    for (auto& b : V.basis_)
        if (!ech.insert_tracked(to_sparse(b)))
            throw std::runtime_error("build_module: stated basis is not independent");

    int d = static_cast<int>(V.basis_.size());
    auto gens = s.generator_monos();
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        DenseMat mat(d, d);
        for (int j = 0; j < d; ++j) {
            AlgElem img = AlgElem(n, gens[gi]) * V.basis_[j];
            auto coords = ech.coordinates(to_sparse(img));
            if (!coords)
                throw std::runtime_error("build_module: submodule is not closed under " +
                                         mono_str(gens[gi], n));
            for (int i = 0; i < d; ++i) mat.at(i, j) = (*coords)[i];
        }
        V.gen_.push_back(std::move(mat));
    }
    if (V.relation_violations() != 0)
        throw std::runtime_error("build_module: generator matrices violate the relations");
    return V;
}

Cyc trace_char(const StructureSet& s, const ModuleRep& V, const AlgElem& a) {
    return V.trace(s.kappa * a);
}

AlgElem phi_central(const StructureSet& s, const ModuleRep& V) {
    const int n = s.cfg.n;
    TensorElem dc = s.cop.delta(s.c_integral);
    AlgElem out(n);
    for (auto& [k, c] : dc.terms()) {
        Mono m1 = TensorElem::slot(k, 0), m2 = TensorElem::slot(k, 1);
        Cyc w = trace_char(s, V, s.S(m2)) * c;
        if (!w.is_zero()) out.add(m1, w);
    }
    return out;
}

AlgElem chi_central(const StructureSet& s, const ModuleRep& V) {
    const int n = s.cfg.n;
    AlgElem out(n);
    for (auto& [k, c] : s.M.terms()) {
        Mono m1 = TensorElem::slot(k, 0), m2 = TensorElem::slot(k, 1);
        Cyc w = V.trace(s.kappa * s.S(m2)) * c;
        if (!w.is_zero()) out.add(m1, w);
    }
    return out;
}

AlgElem phi_closed_form(const StructureSet& s, const std::string& label) {
    const int n = s.cfg.n;
    std::uint32_t top = (1u << (2 * n)) - 1;
    Cyc nu(s.cfg.nu);
    if (label == "X0+" || label == "X0-") {
        AlgElem K(n, mono_K());
        AlgElem head = (label == "X0+") ? K + s.one : K - s.one;
        return (head * s.e0 * AlgElem(n, mono_make(top, 0)))
            .scaled(nu * Cyc::pow2(n) * s.cfg.beta_pow(2));
    }
    if (label == "X1+") return s.e1_plus.scaled(nu * Cyc::pow2(n + 1));
    if (label == "X1-") return s.e1_minus.scaled(-(nu * Cyc::pow2(n + 1)));
    if (label == "P0+")
        return (AlgElem(n, mono_make(top, 1)) * s.e0)
            .scaled(nu * Cyc::pow2(3 * n) * s.cfg.beta_pow(2));
    throw std::invalid_argument("phi_closed_form: no closed form for " + label);
}

AlgElem chi_closed_form(const StructureSet& s, const std::string& label) {
    const int n = s.cfg.n;
    std::uint32_t top = (1u << (2 * n)) - 1;
    if (label == "X0+") return s.e1 + s.e0;
    if (label == "X0-") return s.e1 - s.e0;
    if (label == "X1+" || label == "X1-") {
        Cyc sgn(label == "X1+" ? 1 : -1);
        AlgElem head = (AlgElem(n, mono_make(top, 1)) * s.e0)
                           .scaled(sgn * s.cfg.beta_pow(2) * Cyc::pow2(2 * n));
        return head + (s.e1_plus - s.e1_minus).scaled(Cyc::pow2(n));
    }
    if (label == "P0+") return s.e1.scaled(Cyc::pow2(2 * n));
    throw std::invalid_argument("chi_closed_form: no closed form for " + label);
}

int hom_dimension(const ModuleRep& V, const ModuleRep& W) {
    // variables X_{ab} (a < dim W, b < dim V); equations rho_W(g) X = X rho_V(g)
    int dv = V.dim(), dw = W.dim();
    int ng = 2 * V.rank() + 1;
    std::vector<SparseVec> columns(static_cast<std::size_t>(dw) * dv);
    auto accum = [](SparseVec& col, std::uint64_t key, const Cyc& val) {
        auto [it, fresh] = col.try_emplace(key, val);
        if (!fresh) {
            it->second += val;
            if (it->second.is_zero()) col.erase(it);
        }
    };
    for (int g = 0; g < ng; ++g) {
        const DenseMat& gv = V.gen(g);
        const DenseMat& gw = W.gen(g);
        for (int a = 0; a < dw; ++a)
            for (int b = 0; b < dv; ++b) {
                SparseVec& col = columns[static_cast<std::size_t>(a) * dv + b];
                for (int i = 0; i < dw; ++i) {
                    const Cyc& w = gw.at(i, a);
                    if (!w.is_zero())
                        accum(col, (static_cast<std::uint64_t>(g) * dw + i) * dv + b, w);
                }
                for (int j = 0; j < dv; ++j) {
                    const Cyc& v = gv.at(b, j);
                    if (!v.is_zero())
                        accum(col, (static_cast<std::uint64_t>(g) * dw + a) * dv + j, -v);
                }
            }
    }
    return static_cast<int>(sparse_kernel(columns).size());
}

std::vector<CheckResult> cartan_and_basic_algebra(const StructureSet& s,
                                                  bool with_endomorphisms) {
    std::vector<CheckResult> out;
    const int n = s.cfg.n;

    // (i) composition multiplicities of P0+-: K-eigenspace dimensions
    {
        Stopwatch sw;
        long bad = 0;
        for (const char* lbl : {"P0+", "P0-"}) {
            ModuleRep P = build_module(s, lbl);
            for (int sign : {+1, -1}) {
                DenseMat m = P.gen(0);  // K
                for (int i = 0; i < P.dim(); ++i) m.at(i, i) -= Cyc(sign);
                int mult = P.dim() - m.rank();
                if (mult != (1 << (2 * n - 1))) ++bad;
            }
        }
        out.push_back(make_result("cartan.multiplicities",
                                  "each projective cover has 2^(2N-1) copies of each X0^pm",
                                  bad, sw.ms()));
    }

    // (ii) regular decomposition dimension identity
    {
        Stopwatch sw;
        long bad = ((1 << (2 * n + 2)) != 2 * (1 << (2 * n)) + 2 * (1 << n) * (1 << n));
        out.push_back(make_result("cartan.regular_dimension",
                                  "dim Q = 2 dim P0 + 2^N dim X1+ + 2^N dim X1-",
                                  bad, sw.ms()));
    }

    if (with_endomorphisms) {
        Stopwatch sw;
        std::vector<ModuleRep> G;
        G.push_back(build_module(s, "P0+"));
        G.push_back(build_module(s, "P0-"));
        G.push_back(build_module(s, "X1+"));
        G.push_back(build_module(s, "X1-"));
        int dim_end = 0;
        for (auto& V : G)
            for (auto& W : G) dim_end += hom_dimension(V, W);
        int expect = 2 * (1 << (2 * n)) + 2;
        std::ostringstream note;
        note << "dim End(G_Q) = " << dim_end << ", expected " << expect;
        out.push_back(make_result("cartan.endomorphisms",
                                  "dim End_Q(G_Q) = 2*4^N + 2 via exact commutants",
                                  dim_end != expect, sw.ms(), note.str()));
    }
    return out;
}

std::vector<CheckResult> check_characters(const StructureSet& s) {
    std::vector<CheckResult> out;
    const int n = s.cfg.n;

    {
        Stopwatch sw;
        long bad = 0;
        for (const char* lbl : {"X0+", "X0-", "X1+", "X1-"}) {
            ModuleRep V = build_module(s, lbl);
            if (phi_central(s, V) != phi_closed_form(s, lbl)) ++bad;
            if (chi_central(s, V) != chi_closed_form(s, lbl)) ++bad;
        }
        // phi_P0+ = 2^(2N-1)(phi_X0+ + phi_X0-), computed both ways
        ModuleRep P = build_module(s, "P0+");
        AlgElem viaP = phi_central(s, P);
        if (viaP != phi_closed_form(s, "P0+")) ++bad;
        if (viaP != (phi_closed_form(s, "X0+") + phi_closed_form(s, "X0-"))
                        .scaled(Cyc::pow2(2 * n - 1)))
            ++bad;
        if (chi_central(s, P) != chi_closed_form(s, "P0+")) ++bad;
        out.push_back(make_result("characters.closed_forms",
                                  "trace-built phi_V and bchi_V match their closed forms",
                                  bad, sw.ms()));
    }

    {
        Stopwatch sw;
        long bad = 0;
        // centrality of the character elements
        for (const char* lbl : {"X0+", "X1+", "P0+"}) {
            AlgElem z = phi_closed_form(s, lbl);
            AlgElem w = chi_closed_form(s, lbl);
            for (Mono g : s.generator_monos()) {
                AlgElem x(n, g);
                if (z * x != x * z) ++bad;
                if (w * x != x * w) ++bad;
            }
        }
        out.push_back(make_result("characters.central",
                                  "phi_V and bchi_V are central", bad, sw.ms()));
    }

    {
        Stopwatch sw;
        // injectivity on the span of the four simples: coordinate rank 4
        std::vector<SparseVec> rows_phi, rows_chi;
        for (const char* lbl : {"X0+", "X0-", "X1+", "X1-"}) {
            SparseVec rp, rc;
            AlgElem phi = phi_closed_form(s, lbl);
            AlgElem chi = chi_closed_form(s, lbl);
            for (auto& [m, c] : phi.terms()) rp[m] = c;
            for (auto& [m, c] : chi.terms()) rc[m] = c;
            rows_phi.push_back(std::move(rp));
            rows_chi.push_back(std::move(rc));
        }
        long bad = (sparse_rank(rows_phi) != 4) + (sparse_rank(rows_chi) != 4);
        out.push_back(make_result("characters.injective",
                                  "phi and bchi coordinate matrices have rank 4",
                                  bad, sw.ms()));
    }

    {
        Stopwatch sw;
        // trace identity Tr_{X1pm}(K^e prod f- f+) = (pm i)^e
        long bad = 0;
        AlgElem ffprod = s.one;
        for (int k = 1; k <= n; ++k)
            ffprod = ffprod * (AlgElem(n, mono_f(k, -1)) * AlgElem(n, mono_f(k, +1)));
        for (int sign : {+1, -1}) {
            ModuleRep V = build_module(s, sign > 0 ? "X1+" : "X1-");
            for (int e = 0; e < 4; ++e) {
                Cyc want = (sign > 0 ? Cyc::i() : -Cyc::i()).pow(e);
                if (V.trace(AlgElem(n, mono_K(e)) * ffprod) != want) ++bad;
            }
        }
        out.push_back(make_result("characters.trace_identity",
                                  "Tr_{X1pm}(K^e prod f- f+) = (pm i)^e", bad, sw.ms()));
    }
    return out;
}

}  // namespace qsf
