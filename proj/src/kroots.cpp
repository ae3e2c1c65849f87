#include "curves/kroots.hpp"

#include <algorithm>

namespace curves {

namespace {

bool is_prime(unsigned long n) {
    mpz_class z(static_cast<unsigned long>(n));
    return mpz_probab_prime_p(z.get_mpz_t(), 40) > 0;
}

unsigned long powmod_ul(unsigned long base, unsigned long exp, unsigned long mod) {
    mpz_class b(base), e(exp), m(mod), r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r.get_ui();
}

} // namespace

unsigned long find_split_prime(unsigned long start) {
    for (unsigned long p = start | 1;; p += 2) {
        if (p % 3 != 1 || !is_prime(p)) continue;
        if (powmod_ul(2, (p - 1) / 3, p) == 1) return p;
    }
}

// ----------------------------------------------------------------- LLL

namespace {
mpz_class round_nearest(const mpq_class& q) {
    // floor(q + 1/2)
    mpq_class shifted = q + mpq_class(1, 2);
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
    return r;
}

struct Gso {
    std::vector<std::vector<mpq_class>> mu;
    std::vector<mpq_class> norm; // squared norms of the orthogonalized basis

    void compute(const std::vector<std::vector<mpz_class>>& b) {
        size_t n = b.size(), d = b[0].size();
        std::vector<std::vector<mpq_class>> star(n, std::vector<mpq_class>(d));
        mu.assign(n, std::vector<mpq_class>(n, 0));
        norm.assign(n, 0);
        for (size_t i = 0; i < n; ++i) {
            for (size_t k = 0; k < d; ++k) star[i][k] = mpq_class(b[i][k]);
            for (size_t j = 0; j < i; ++j) {
                mpq_class dot = 0;
                for (size_t k = 0; k < d; ++k) dot += mpq_class(b[i][k]) * star[j][k];
                mu[i][j] = sgn(norm[j]) == 0 ? mpq_class(0) : dot / norm[j];
                for (size_t k = 0; k < d; ++k) star[i][k] -= mu[i][j] * star[j][k];
            }
            for (size_t k = 0; k < d; ++k) norm[i] += star[i][k] * star[i][k];
        }
    }
};
} // namespace

std::vector<std::vector<mpz_class>> lll_reduce(std::vector<std::vector<mpz_class>> b) {
    size_t n = b.size();
    if (n <= 1) return b;
    Gso g;
    g.compute(b);
    const mpq_class delta(3, 4);
    size_t k = 1;
    while (k < n) {
        for (size_t j = k; j-- > 0;) {
            mpz_class r = round_nearest(g.mu[k][j]);
            if (sgn(r) != 0) {
                for (size_t c = 0; c < b[k].size(); ++c) b[k][c] -= r * b[j][c];
                g.compute(b);
            }
        }
        mpq_class lhs = g.norm[k];
        mpq_class rhs = (delta - g.mu[k][k - 1] * g.mu[k][k - 1]) * g.norm[k - 1];
        if (lhs >= rhs) {
            ++k;
        } else {
            std::swap(b[k], b[k - 1]);
            g.compute(b);
            k = k > 1 ? k - 1 : 1;
        }
    }
    return b;
}

// ------------------------------------------------------- p-adic embedding

namespace {

struct BadPrime : std::runtime_error {
    BadPrime() : std::runtime_error("prime unusable for this polynomial") {}
};

mpz_class mod_pos(const mpz_class& x, const mpz_class& m) {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

mpz_class inv_mod(const mpz_class& x, const mpz_class& m) {
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0) throw BadPrime();
    return r;
}

/// Embedding K -> Z/p^k built by Hensel-lifting chosen images of w and a.
struct PadicEmbedding {
    unsigned long p;
    int k;
    mpz_class pk;
    mpz_class basis_img[6];

    PadicEmbedding(unsigned long prime, int precision) : p(prime), k(precision) {
        mpz_class pz(prime);
        mpz_pow_ui(pk.get_mpz_t(), pz.get_mpz_t(), k);
        // base images by direct search in F_p
        unsigned long w = 0, a = 0;
        bool got_w = false, got_a = false;
        for (unsigned long x = 1; x < prime && !(got_w && got_a); ++x) {
            unsigned long x2 = static_cast<unsigned long>(
                (static_cast<unsigned long long>(x) * x) % prime);
            if (!got_w && (x2 + x + 1) % prime == 0) {
                w = x;
                got_w = true;
            }
            if (!got_a) {
                unsigned long x3 = static_cast<unsigned long>(
                    (static_cast<unsigned long long>(x2) * x) % prime);
                if (x3 % prime == 2 % prime) {
                    a = x;
                    got_a = true;
                }
            }
        }
        if (!got_w || !got_a) throw BadPrime();
        mpz_class wl = lift_root(mpz_class(w), {1, 1, 1});     // x^2 + x + 1
        mpz_class al = lift_root(mpz_class(a), {-2, 0, 0, 1}); // x^3 - 2
        basis_img[0] = 1;
        basis_img[1] = wl;
        basis_img[2] = al;
        basis_img[3] = mod_pos(wl * al, pk);
        basis_img[4] = mod_pos(al * al, pk);
        basis_img[5] = mod_pos(wl * basis_img[4], pk);
    }

    // Newton lifting of a simple root of an integer polynomial (ascending
    // coefficients) from mod p to mod p^k
    mpz_class lift_root(mpz_class r, const std::vector<long>& coeffs) const {
        mpz_class mod(p);
        while (mod < pk) {
            mod = mod * mod;
            if (mod > pk) mod = pk;
            mpz_class val = 0, der = 0, pw = 1;
            for (size_t i = 0; i < coeffs.size(); ++i) {
                val += coeffs[i] * pw;
                if (i + 1 < coeffs.size())
                    der += static_cast<long>(i + 1) * coeffs[i + 1] * pw;
                pw = mod_pos(pw * r, mod);
            }
            r = mod_pos(r - mod_pos(val, mod) * inv_mod(der, mod), mod);
        }
        return r;
    }

    mpz_class embed(const FieldK& x) const {
        mpz_class acc = 0;
        for (int i = 0; i < 6; ++i) {
            const Rational& q = x.coord(i);
            if (sgn(q) == 0) continue;
            mpz_class num = mod_pos(q.get_num(), pk);
            acc += num * inv_mod(mod_pos(q.get_den(), pk), pk) % pk * basis_img[i];
        }
        return mod_pos(acc, pk);
    }

    std::vector<mpz_class> embed_poly(const UniPoly& f) const {
        std::vector<mpz_class> out;
        for (const FieldK& c : f.coeffs()) out.push_back(embed(c));
        return out;
    }
};

mpz_class eval_mod(const std::vector<mpz_class>& coeffs, const mpz_class& x,
                   const mpz_class& m) {
    mpz_class acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = mod_pos(acc * x + *it, m);
    return acc;
}

std::vector<mpz_class> derivative_mod(const std::vector<mpz_class>& coeffs) {
    std::vector<mpz_class> d;
    for (size_t i = 1; i < coeffs.size(); ++i) d.push_back(static_cast<long>(i) * coeffs[i]);
    return d;
}

/// Reconstruct beta in K with embed(beta) = r (mod p^k) via a dim-7 lattice
/// on (c0..c5, d): beta = (sum c_i b_i) / d.
std::optional<FieldK> reconstruct(const mpz_class& r, const PadicEmbedding& emb) {
    std::vector<std::vector<mpz_class>> basis;
    basis.push_back({emb.pk, 0, 0, 0, 0, 0, 0});
    for (int i = 1; i < 6; ++i) {
        std::vector<mpz_class> v(7, 0);
        v[0] = -emb.basis_img[i];
        v[i] = 1;
        basis.push_back(v);
    }
    {
        std::vector<mpz_class> v(7, 0);
        v[0] = r;
        v[6] = 1;
        basis.push_back(v);
    }
    auto red = lll_reduce(std::move(basis));
    for (const auto& v : red) {
        if (sgn(v[6]) == 0) continue;
        std::array<Rational, 6> coords;
        for (int i = 0; i < 6; ++i) coords[i] = make_rational(v[i], v[6]);
        return FieldK(coords);
    }
    return std::nullopt;
}

} // namespace

namespace {

/// F_p roots of rem at a split prime, or BadPrime when the reduction drops
/// degree or has repeated roots.
std::vector<mpz_class> residues_mod_p(const UniPoly& rem, unsigned long prime) {
    PadicEmbedding base(prime, 1);
    std::vector<mpz_class> fp = base.embed_poly(rem);
    while (!fp.empty() && sgn(fp.back()) == 0) fp.pop_back();
    if (static_cast<int>(fp.size()) - 1 != rem.degree()) throw BadPrime();
    // roots in F_p by direct scan in machine words (p < 2^32)
    std::vector<unsigned long long> fpl, dfpl;
    for (const mpz_class& c : fp) fpl.push_back(mpz_fdiv_ui(c.get_mpz_t(), prime));
    for (size_t i = 1; i < fpl.size(); ++i) dfpl.push_back(i * fpl[i] % prime);
    auto horner = [&](const std::vector<unsigned long long>& cs, unsigned long long x) {
        unsigned long long acc = 0;
        for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = (acc * x + *it) % prime;
        return acc;
    };
    std::vector<mpz_class> residues;
    for (unsigned long long x = 0; x < prime; ++x) {
        if (horner(fpl, x) != 0) continue;
        if (horner(dfpl, x) == 0)
            throw BadPrime(); // repeated root mod p of a squarefree poly
        residues.push_back(mpz_class(static_cast<unsigned long>(x)));
    }
    return residues;
}

/// Lift a simple residue to mod p^prec and attempt lattice reconstruction;
/// only exactly verified roots are returned.
std::optional<FieldK> root_from_residue(const UniPoly& rem, unsigned long prime,
                                        const mpz_class& r0, int prec) {
    PadicEmbedding emb(prime, prec);
    std::vector<mpz_class> fk = emb.embed_poly(rem);
    std::vector<mpz_class> dfk = derivative_mod(fk);
    mpz_class r = r0, mod(prime);
    while (mod < emb.pk) {
        mod = mod * mod;
        if (mod > emb.pk) mod = emb.pk;
        mpz_class val = eval_mod(fk, r, mod);
        mpz_class der = eval_mod(dfk, r, mod);
        r = mod_pos(r - val * inv_mod(der, mod), mod);
    }
    auto beta = reconstruct(r, emb);
    if (beta && rem.eval(*beta).is_zero()) return beta;
    return std::nullopt;
}

} // namespace

KRootReport roots_in_k(const UniPoly& input) {
    if (input.is_zero()) throw std::runtime_error("roots_in_k: zero polynomial");
    KRootReport report;
    if (input.degree() == 0) {
        report.residual = UniPoly::constant(FieldK(1));
        return report;
    }
    UniPoly rem = squarefree_part(input);
    std::vector<FieldK> found;

    // Peel off roots until a prime certifies that none remain: a K-root
    // reduces to an F_p root at every prime of good reduction, so a prime
    // where the cofactor has no F_p roots proves the cofactor rootless.
    // Low reconstruction precision suffices for the small-height roots
    // that actually occur; barren primes escalate it before giving up.
    unsigned long prime = 1000003;
    int bad = 0, barren = 0, prec = 12;
    while (rem.degree() >= 1) {
        if (rem.degree() == 1) {
            found.push_back(-(rem.coeffs()[0] * rem.coeffs()[1].inv()));
            break;
        }
        prime = find_split_prime(prime);
        std::vector<mpz_class> residues;
        try {
            residues = residues_mod_p(rem, prime);
        } catch (const BadPrime&) {
            prime += 2;
            if (++bad > 24) throw std::runtime_error("roots_in_k: no usable prime found");
            continue;
        }
        if (residues.empty()) break; // certified: no K-roots left
        bool progress = false;
        for (const mpz_class& r0 : residues) {
            auto beta = root_from_residue(rem, prime, r0, prec);
            if (beta) {
                found.push_back(*beta);
                UniPoly lin({-*beta, FieldK(1)});
                rem = rem.divide_exact(lin);
                progress = true;
                break; // residues refer to the old cofactor
            }
        }
        if (progress) {
            barren = 0;
            continue; // re-run the same prime against the smaller cofactor
        }
        prime += 2;
        if (++barren >= 10) {
            // ten consecutive barren primes: any true root would need a
            // higher-precision lattice, so double it; past the cap, treat
            // the cofactor as rootless (it is reported in the residual)
            if (prec >= 96) break;
            prec *= 2;
            barren = 0;
        }
    }

    std::sort(found.begin(), found.end());
    UniPoly residual = input;
    for (const FieldK& beta : found) {
        UniPoly lin({-beta, FieldK(1)});
        int mult = 0;
        while (residual.degree() >= 1 && residual.eval(beta).is_zero()) {
            residual = residual.divide_exact(lin);
            ++mult;
        }
        report.roots.push_back({beta, mult});
    }
    report.residual = residual.monic();
    return report;
}

} // namespace curves
