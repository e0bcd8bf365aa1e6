#include "qsf/center.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace qsf {

namespace {

SparseVec to_sparse(const AlgElem& a) {
    SparseVec v;
    for (auto& [m, c] : a.terms()) v[m] = c;
    return v;
}

std::vector<std::uint32_t> even_masks_graded(int n) {
    std::vector<std::uint32_t> masks;
    for (std::uint32_t m = 0; m < (1u << (2 * n)); ++m)
        if (std::popcount(m) % 2 == 0) masks.push_back(m);
    std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
        return std::popcount(a) != std::popcount(b) ? std::popcount(a) < std::popcount(b)
                                                    : a < b;
    });
    return masks;
}

}  // namespace

std::vector<Cyc> CenterBasis::coordinates(const AlgElem& z) const {
    if (coords_.rank() == 0)
        for (auto& b : full) coords_.insert_tracked(to_sparse(b));
    auto c = coords_.coordinates(to_sparse(z));
    if (!c) throw std::invalid_argument("CenterBasis: element is not in the centre");
    return *c;
}

int CenterBasis::lambda_index(std::uint32_t mask) const {
    for (std::size_t i = 0; i < zLambdaMasks.size(); ++i)
        if (zLambdaMasks[i] == mask) return 3 + static_cast<int>(i);
    throw std::invalid_argument("CenterBasis: not an even mask");
}

CenterBasis make_center_basis(const StructureSet& s) {
    const int n = s.cfg.n;
    CenterBasis cb;
    cb.cfg = s.cfg;
    cb.e1_plus = s.e1_plus;
    cb.e1_minus = s.e1_minus;

    // phi_P0+ = nu 2^(3N) beta^2 K e0 prod f+ f-,  phi_X1pm = pm nu 2^(N+1) e1pm
    std::uint32_t top = (1u << (2 * n)) - 1;
    AlgElem KtopE0 = AlgElem(n, mono_make(top, 1)) * s.e0;
    Cyc pref = Cyc(s.cfg.nu) * Cyc::pow2(3 * n) * s.cfg.beta_pow(2);
    cb.zP.push_back(KtopE0.scaled(pref));
    cb.zP.push_back(s.e1_plus.scaled(Cyc(s.cfg.nu) * Cyc::pow2(n + 1)));
    cb.zP.push_back(s.e1_minus.scaled(-(Cyc(s.cfg.nu) * Cyc::pow2(n + 1))));

    for (std::uint32_t m : even_masks_graded(n)) {
        cb.zLambdaMasks.push_back(m);
        cb.zLambda.push_back(AlgElem(n, mono_make(m, 0)) * s.e0);
    }

    cb.full = cb.zP;
    cb.full.insert(cb.full.end(), cb.zLambda.begin(), cb.zLambda.end());
    return cb;
}

CenterData compute_center(const QConfig& cfg) {
    cfg.validate();
    auto s = build_structures(cfg);
    const int n = cfg.n;
    CenterData out;
    out.basis = make_center_basis(s);

    Stopwatch sw;
    auto gens = s.generator_monos();
    auto monos = all_monomials(n);
    std::vector<SparseVec> columns;
    for (Mono m : monos) {
        SparseVec col;
        AlgElem x(n, m);
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            AlgElem g(n, gens[gi]);
            AlgElem comm = x * g - g * x;
            for (auto& [mm, c] : comm.terms())
                col[(static_cast<std::uint64_t>(gi) << 16) | mm] = c;
        }
        columns.push_back(std::move(col));
    }
    auto kernel = sparse_kernel(columns);
    for (auto& kv : kernel) {
        AlgElem z(n);
        for (std::size_t j = 0; j < kv.size(); ++j)
            if (!kv[j].is_zero()) z.add(monos[j], kv[j]);
        out.kernel.push_back(std::move(z));
    }

    int expect = 3 + (1 << (2 * n - 1));
    std::ostringstream note;
    note << "dimension " << out.kernel.size() << ", expected " << expect;
    if (static_cast<int>(out.kernel.size()) != expect)
        throw std::runtime_error("compute_center: " + note.str());
    out.checks.push_back(make_result("center.dimension",
                                     "dim Z(Q) = 3 + 2^(2N-1) from the commutant kernel",
                                     0, sw.ms(), note.str()));

    // mutual span containment, with the exact coordinate change recorded
    Stopwatch sw2;
    long bad = 0;
    Echelon closed, solved;
    for (auto& b : out.basis.full) closed.insert(to_sparse(b));
    for (auto& z : out.kernel) solved.insert(to_sparse(z));
    for (auto& z : out.kernel)
        if (!closed.contains(to_sparse(z))) ++bad;
    for (auto& b : out.basis.full)
        if (!solved.contains(to_sparse(b))) ++bad;
    for (auto& z : out.kernel) out.kernel_coordinates.push_back(out.basis.coordinates(z));
    out.checks.push_back(make_result("center.span",
                                     "kernel basis and closed-form basis span the same space",
                                     bad, sw2.ms()));
    return out;
}

std::vector<CheckResult> special_idempotents(const StructureSet& s) {
    std::vector<CheckResult> out;
    Stopwatch sw;
    long bad = 0;
    bad += (s.e1_plus * s.e1_plus != s.e1_plus);
    bad += (s.e1_minus * s.e1_minus != s.e1_minus);
    bad += !(s.e1_plus * s.e1_minus).is_zero();
    bad += !(s.e1_minus * s.e1_plus).is_zero();
    bad += (s.e1_plus + s.e1_minus != s.e1);
    for (Mono m : all_monomials(s.cfg.n)) {
        AlgElem x(s.cfg.n, m);
        if (s.e1_plus * x != x * s.e1_plus) ++bad;
        if (s.e1_minus * x != x * s.e1_minus) ++bad;
    }
    Cyc binv = s.cfg.beta().inverse();
    bad += (s.v_inv * s.e1_plus != s.e1_plus.scaled(binv));
    bad += (s.v_inv * s.e1_minus != s.e1_minus.scaled(-binv));
    out.push_back(make_result("center.idempotents",
                              "e1^pm are central orthogonal idempotents with "
                              "v^-1 e1^pm = +-beta^-1 e1^pm",
                              bad, sw.ms()));
    return out;
}

AlgElem theta_map(int n, const UTensor& u) {
    AlgElem e0(n);
    e0.add(mono_one(), Cyc::half());
    e0.add(mono_K(2), Cyc::half());
    AlgElem out(n);
    for (auto& [code, c] : u) {
        // factor cases concatenate without signs: per-index words are
        // already in canonical interleaved order and e0 is absorbing
        std::uint32_t mask = 0;
        for (int i = 0; i < n; ++i) {
            std::uint32_t cs = (code >> (2 * i)) & 3u;
            if (cs == 1) mask |= 1u << (2 * i + 1);       // f-_i
            else if (cs == 2) mask |= 1u << (2 * i);      // f+_i
            else if (cs == 3) mask |= 3u << (2 * i);      // f+_i f-_i
        }
        out += (AlgElem(n, mono_make(mask, 0)) * e0).scaled(c);
    }
    return out;
}

UTensor theta_inverse(int n, const AlgElem& z) {
    // coordinates over {word * e0} read off the K^0 coefficients; the
    // reconstruction check rejects anything outside Z_Lambda
    UTensor u;
    for (auto& [m, c] : z.terms()) {
        if (mono_kexp(m) != 0) continue;
        std::uint32_t mask = mono_fmask(m);
        if (std::popcount(mask) % 2 != 0)
            throw std::invalid_argument("theta_inverse: odd word, not in Z_Lambda");
        std::uint32_t code = 0;
        for (int i = 0; i < n; ++i) {
            bool p = mask & (1u << (2 * i)), q = mask & (1u << (2 * i + 1));
            code |= (p && q ? 3u : p ? 2u : q ? 1u : 0u) << (2 * i);
        }
        u[code] = c + c;  // word*e0 contributes 1/2 at K^0
    }
    if (theta_map(n, u) != z)
        throw std::invalid_argument("theta_inverse: element is not in Z_Lambda");
    return u;
}

std::vector<std::uint32_t> uplus_codes(int n) {
    std::vector<std::uint32_t> codes;
    for (std::uint32_t mask : even_masks_graded(n)) {
        std::uint32_t code = 0;
        for (int i = 0; i < n; ++i) {
            bool p = mask & (1u << (2 * i)), q = mask & (1u << (2 * i + 1));
            code |= (p && q ? 3u : p ? 2u : q ? 1u : 0u) << (2 * i);
        }
        codes.push_back(code);
    }
    return codes;
}

}  // namespace qsf
