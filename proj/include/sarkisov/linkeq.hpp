#pragma once

// Certified solving of the binary quadratic relations that constrain a
// two-ray link through a genus-12 midpoint. Nonexistence is only claimed
// with a certificate that can be replayed (see verify_certificate); when no
// certificate is found within bounds the status is Unresolved.

#include "sarkisov/error.hpp"
#include "sarkisov/icalc.hpp"
#include "sarkisov/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace sarkisov::linkeq {

using sarkisov::to_string;

enum class Sign { Any, Positive, NonNegative };

[[nodiscard]] inline std::string to_string(Sign s)
{
    switch (s) {
    case Sign::Any: return "any";
    case Sign::Positive: return "positive";
    case Sign::NonNegative: return "nonnegative";
    }
    return "?";
}

[[nodiscard]] inline bool sign_ok(Sign s, const Rational& v)
{
    switch (s) {
    case Sign::Any: return true;
    case Sign::Positive: return v > 0;
    case Sign::NonNegative: return v >= 0;
    }
    return false;
}

/// a.alpha^2 + b.alpha.beta + c.beta^2 = d with per-variable denominator and
/// sign constraints. alpha is admissible when its reduced denominator is one
/// of `alpha_denominators` (likewise beta). `beta_fixed` pins beta.
struct QuadraticForm
{
    Rational a;
    Rational b;
    Rational c;
    Rational d;
    std::vector<int> alpha_denominators{1};
    std::vector<int> beta_denominators{1};
    Sign alpha_sign = Sign::Any;
    Sign beta_sign = Sign::Any;
    std::optional<Rational> beta_fixed;

    [[nodiscard]] Rational evaluate(const Rational& alpha, const Rational& beta) const
    {
        return a * alpha * alpha + b * alpha * beta + c * beta * beta;
    }

    [[nodiscard]] Rational discriminant() const { return b * b - 4 * a * c; }

    [[nodiscard]] bool admissible(const Rational& alpha, const Rational& beta) const
    {
        auto den_ok = [](const std::vector<int>& allowed, const Rational& v) {
            Integer q = den(v);
            return std::any_of(allowed.begin(), allowed.end(), [&](int k) { return q == k; });
        };
        if (beta_fixed && beta != *beta_fixed) {
            return false;
        }
        return den_ok(alpha_denominators, alpha) && den_ok(beta_denominators, beta) && sign_ok(alpha_sign, alpha)
               && sign_ok(beta_sign, beta);
    }

    [[nodiscard]] bool satisfied_by(const Rational& alpha, const Rational& beta) const
    {
        return admissible(alpha, beta) && evaluate(alpha, beta) == d;
    }

    /// Common denominator L: every admissible alpha, beta lies in (1/L)Z.
    [[nodiscard]] int common_denominator() const
    {
        int l = 1;
        for (int q : alpha_denominators) {
            l = std::lcm(l, q);
        }
        for (int q : beta_denominators) {
            l = std::lcm(l, q);
        }
        return l;
    }

    [[nodiscard]] std::string text() const
    {
        std::ostringstream os;
        os << to_string(a) << "*a^2 + " << to_string(b) << "*a*b + " << to_string(c) << "*b^2 = " << to_string(d);
        if (beta_fixed) {
            os << " with b = " << to_string(*beta_fixed);
        }
        return os.str();
    }

    void validate() const
    {
        auto check = [](const std::vector<int>& v) {
            if (v.empty()) {
                throw Error(ErrorCode::InvalidArgument, "allowed denominators must be nonempty");
            }
            for (int q : v) {
                if (q != 1 && q != 2 && q != 3) {
                    throw Error(ErrorCode::InvalidDenominator, "allowed denominators are drawn from {1,2,3}");
                }
            }
        };
        check(alpha_denominators);
        check(beta_denominators);
    }
};

/// Integer presentation of a form after alpha = x/L, beta = y/L and clearing
/// coefficient denominators: A x^2 + B x y + C y^2 = D.
struct IntegerForm
{
    Integer a;
    Integer b;
    Integer c;
    Integer d;
    int scale = 1;  // L
};

[[nodiscard]] inline IntegerForm integer_form(const QuadraticForm& form)
{
    Integer q = 1;
    for (const Rational* r : {&form.a, &form.b, &form.c, &form.d}) {
        q = boost::multiprecision::lcm(q, den(*r));
    }
    int l = form.common_denominator();
    auto scaled = [&](const Rational& r) { return num(r * Rational(q)); };
    return {scaled(form.a), scaled(form.b), scaled(form.c), scaled(form.d) * l * l, l};
}

enum class Status { Solutions, NoSolutions, Unresolved };

[[nodiscard]] inline std::string to_string(Status s)
{
    switch (s) {
    case Status::Solutions: return "Solutions";
    case Status::NoSolutions: return "NoSolutions";
    case Status::Unresolved: return "Unresolved";
    }
    return "?";
}

enum class CertificateKind {
    None,
    ModularObstruction,
    FiniteFactorization,
    NegativeDiscriminant,
    NonSquareDiscriminant,
    FiniteRootSet,
    Divisibility,
};

[[nodiscard]] inline std::string to_string(CertificateKind k)
{
    switch (k) {
    case CertificateKind::None: return "None";
    case CertificateKind::ModularObstruction: return "ModularObstruction";
    case CertificateKind::FiniteFactorization: return "FiniteFactorization";
    case CertificateKind::NegativeDiscriminant: return "NegativeDiscriminant";
    case CertificateKind::NonSquareDiscriminant: return "NonSquareDiscriminant";
    case CertificateKind::FiniteRootSet: return "FiniteRootSet";
    case CertificateKind::Divisibility: return "Divisibility";
    }
    return "?";
}

struct ModularCertificate
{
    std::int64_t modulus = 0;
    std::int64_t target_residue = 0;
    std::vector<std::int64_t> attained_residues;  // sorted residue table of A x^2 + B x y + C y^2 mod m
    std::int64_t residues_checked = 0;
};

using Point = std::pair<Rational, Rational>;

struct SolutionReport
{
    QuadraticForm form;
    Status status = Status::Unresolved;
    std::vector<Point> solutions;
    /// True when `solutions` is the full (finite) solution set; otherwise it
    /// lists every solution with |alpha|, |beta| <= search_bound.
    bool complete = false;
    int search_bound = 0;
    CertificateKind certificate_kind = CertificateKind::None;
    std::optional<ModularCertificate> modular;
    std::optional<Integer> discriminant;  // of the integer presentation
    std::vector<std::string> evidence;
    std::optional<std::string> side_condition;
    std::optional<std::string> geometric_exclusion;
    std::optional<int> fiber_degree;
};

struct SolveOptions
{
    int modulus_bound = 720;
    int search_bound = 50;
};

namespace detail {

[[nodiscard]] inline std::int64_t mod(const Integer& x, std::int64_t m)
{
    Integer r = x % m;
    if (r < 0) {
        r += m;
    }
    return r.convert_to<std::int64_t>();
}

[[nodiscard]] inline bool is_prime_power(int n)
{
    if (n < 2) {
        return false;
    }
    int p = 2;
    while (p * p <= n && n % p != 0) {
        ++p;
    }
    if (p * p > n) {
        return true;  // n itself is prime
    }
    while (n % p == 0) {
        n /= p;
    }
    return n == 1;
}

[[nodiscard]] inline bool rational_is_square(const Rational& r)
{
    return r >= 0 && is_square(num(r)) && is_square(den(r));
}

/// All admissible solutions with |alpha|, |beta| <= bound, by direct search
/// on the scaled integer presentation.
[[nodiscard]] inline std::vector<Point> box_search(const QuadraticForm& form, int bound)
{
    IntegerForm f = integer_form(form);
    const std::int64_t l = f.scale;
    const std::int64_t lim = static_cast<std::int64_t>(bound) * l;
    const std::int64_t a = to_int64(f.a), b = to_int64(f.b), c = to_int64(f.c), d = to_int64(f.d);
    const std::int64_t coeff_max = std::max({std::abs(a), std::abs(b), std::abs(c)});
    if (coeff_max > (INT64_MAX / 4) / (lim * lim + 1)) {
        throw Error(ErrorCode::InvalidArgument, "box search would overflow 64-bit arithmetic");
    }
    std::vector<Point> out;
    std::int64_t ylo = -lim, yhi = lim;
    if (form.beta_fixed) {
        Rational y = *form.beta_fixed * l;
        if (!is_integer(y) || abs(*form.beta_fixed) > bound) {
            return out;
        }
        ylo = yhi = to_int64(num(y));
    }
    for (std::int64_t x = -lim; x <= lim; ++x) {
        for (std::int64_t y = ylo; y <= yhi; ++y) {
            if (a * x * x + b * x * y + c * y * y != d) {
                continue;
            }
            Point p{Rational(Integer(x), Integer(l)), Rational(Integer(y), Integer(l))};
            if (form.admissible(p.first, p.second)) {
                out.push_back(std::move(p));
            }
        }
    }
    return out;
}

[[nodiscard]] inline std::vector<Integer> divisors(const Integer& n)
{
    Integer m = abs(n);
    if (m == 0) {
        throw Error(ErrorCode::InvalidArgument, "divisors of zero");
    }
    if (m > Integer(1'000'000'000'000LL)) {
        throw Error(ErrorCode::InvalidArgument, "factorization target too large: " + m.str());
    }
    std::int64_t v = m.convert_to<std::int64_t>();
    std::vector<Integer> out;
    for (std::int64_t k = 1; k * k <= v; ++k) {
        if (v % k == 0) {
            out.emplace_back(k);
            if (k * k != v) {
                out.emplace_back(v / k);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline void restrict_to_box(std::vector<Point>& pts, int bound)
{
    std::erase_if(pts, [&](const Point& p) { return abs(p.first) > bound || abs(p.second) > bound; });
}

}  // namespace detail

/// Smallest m <= modulus_bound for which the relation has no solution modulo
/// m, after the integer rescaling of `integer_form` (sign and denominator
/// constraints are relaxed, so an obstruction is sound). Only prime powers
/// are scanned: by CRT an obstruction modulo m implies one modulo some prime
/// power dividing m, so the first prime power found is the smallest modulus.
[[nodiscard]] inline std::optional<ModularCertificate> modular_obstruction_search(const QuadraticForm& form,
                                                                                  int modulus_bound)
{
    if (modulus_bound < 2) {
        throw Error(ErrorCode::InvalidArgument, "modulus bound must be at least 2");
    }
    IntegerForm f = integer_form(form);
    for (int m = 2; m <= modulus_bound; ++m) {
        if (!detail::is_prime_power(m)) {
            continue;
        }
        const std::int64_t a = detail::mod(f.a, m), b = detail::mod(f.b, m), c = detail::mod(f.c, m);
        const std::int64_t target = detail::mod(f.d, m);
        std::vector<char> hit(static_cast<std::size_t>(m), 0);
        for (std::int64_t x = 0; x < m; ++x) {
            for (std::int64_t y = 0; y < m; ++y) {
                hit[static_cast<std::size_t>((a * x % m * x + b * x % m * y + c * y % m * y) % m)] = 1;
            }
        }
        if (!hit[static_cast<std::size_t>(target)]) {
            ModularCertificate cert;
            cert.modulus = m;
            cert.target_residue = target;
            cert.residues_checked = static_cast<std::int64_t>(m) * m;
            for (std::int64_t r = 0; r < m; ++r) {
                if (hit[static_cast<std::size_t>(r)]) {
                    cert.attained_residues.push_back(r);
                }
            }
            return cert;
        }
    }
    return std::nullopt;
}

namespace detail {

inline SolutionReport solve_fixed_beta(SolutionReport rep)
{
    const auto& f = rep.form;
    const Rational beta = *f.beta_fixed;
    // a.alpha^2 + (b.beta).alpha + (c.beta^2 - d) = 0
    const Rational qa = f.a, qb = f.b * beta, qc = f.c * beta * beta - f.d;
    std::vector<Rational> roots;
    if (qa == 0) {
        if (qb == 0) {
            if (qc != 0) {
                rep.status = Status::NoSolutions;
                rep.complete = true;
                rep.certificate_kind = CertificateKind::FiniteRootSet;
                rep.evidence.push_back("with beta fixed the relation is the false constant identity " + to_string(qc)
                                       + " = 0");
                return rep;
            }
            rep.solutions = box_search(f, rep.search_bound);
            rep.status = rep.solutions.empty() ? Status::Unresolved : Status::Solutions;
            rep.evidence.push_back("with beta fixed the relation holds identically in alpha");
            return rep;
        }
        roots.push_back(-qc / qb);
    } else {
        Rational disc = qb * qb - 4 * qa * qc;
        rep.evidence.push_back("univariate discriminant " + to_string(disc));
        if (disc >= 0 && rational_is_square(disc)) {
            Rational s(isqrt(num(disc)), isqrt(den(disc)));
            roots.push_back((-qb - s) / (2 * qa));
            if (s != 0) {
                roots.push_back((-qb + s) / (2 * qa));
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    rep.complete = true;
    for (const auto& r : roots) {
        if (f.admissible(r, beta)) {
            rep.solutions.emplace_back(r, beta);
            rep.evidence.push_back("rational root alpha = " + to_string(r) + " is admissible");
        } else {
            rep.evidence.push_back("rational root alpha = " + to_string(r) + " violates the sign or denominator constraint");
        }
    }
    if (roots.empty()) {
        rep.evidence.push_back("no rational root");
    }
    if (rep.solutions.empty()) {
        rep.status = Status::NoSolutions;
        rep.certificate_kind = CertificateKind::FiniteRootSet;
    } else {
        rep.status = Status::Solutions;
    }
    return rep;
}

inline SolutionReport solve_factorization(SolutionReport rep, const IntegerForm& f, const Integer& s)
{
    // With A != 0: 4A(Ax^2 + Bxy + Cy^2) = (2Ax + (B-s)y)(2Ax + (B+s)y) = 4AD.
    // With A == 0 the roles of x and y are exchanged.
    const bool swap = f.a == 0;
    const Integer A = swap ? f.c : f.a;
    const Integer B = f.b;
    const Integer n = 4 * A * f.d;
    rep.evidence.push_back("discriminant " + rep.discriminant->str() + " = " + s.str()
                           + "^2 is a perfect square, so the form splits into linear factors u*v = " + n.str());
    std::set<Point> found;
    std::size_t pairs = 0;
    for (const Integer& dpos : divisors(n)) {
        for (const Integer& u : {dpos, Integer(-dpos)}) {
            ++pairs;
            Integer v = n / u;
            // u = 2A p + (B - s) q, v = 2A p + (B + s) q
            Integer q2 = v - u;
            if (q2 % (2 * s) != 0) {
                continue;
            }
            Integer q = q2 / (2 * s);
            Integer p2 = u - (B - s) * q;
            if (p2 % (2 * A) != 0) {
                continue;
            }
            Integer p = p2 / (2 * A);
            Integer x = swap ? q : p;
            Integer y = swap ? p : q;
            Point pt{Rational(x, Integer(f.scale)), Rational(y, Integer(f.scale))};
            std::string where = "(" + to_string(pt.first) + ", " + to_string(pt.second) + ")";
            if (rep.form.admissible(pt.first, pt.second)) {
                found.insert(pt);
                rep.evidence.push_back("divisor pair (" + u.str() + ", " + v.str() + ") gives admissible " + where);
            } else {
                rep.evidence.push_back("divisor pair (" + u.str() + ", " + v.str() + ") gives " + where
                                       + ", rejected by sign or denominator constraint");
            }
        }
    }
    rep.evidence.push_back(std::to_string(pairs) + " divisor pairs exhausted; all others give non-integral points");
    rep.solutions.assign(found.begin(), found.end());
    rep.complete = true;
    rep.status = rep.solutions.empty() ? Status::NoSolutions : Status::Solutions;
    if (rep.solutions.empty()) {
        rep.certificate_kind = CertificateKind::FiniteFactorization;
    }
    return rep;
}

inline SolutionReport solve_definite(SolutionReport rep, const IntegerForm& f)
{
    // 4A.Q = (2Ax + By)^2 - disc.y^2 and disc < 0 bound |y|; symmetrically |x|.
    const Integer neg = -*rep.discriminant;
    Integer ybound = 0, xbound = 0;
    if (f.a * f.d > 0) {
        ybound = isqrt(4 * f.a * f.d / neg) + 1;
    }
    if (f.c * f.d > 0) {
        xbound = isqrt(4 * f.c * f.d / neg) + 1;
    }
    if (f.a * f.d <= 0 || f.c * f.d <= 0) {
        rep.evidence.push_back("definite form of sign opposite to the right-hand side, or zero right-hand side");
    } else {
        rep.evidence.push_back("definite form: |x| <= " + xbound.str() + ", |y| <= " + ybound.str()
                               + " on the scaled lattice");
    }
    std::vector<Point> pts;
    if (f.a * f.d > 0 && f.c * f.d > 0) {
        const std::int64_t xb = to_int64(xbound), yb = to_int64(ybound);
        for (std::int64_t x = -xb; x <= xb; ++x) {
            for (std::int64_t y = -yb; y <= yb; ++y) {
                if (f.a * x * x + f.b * x * y + f.c * y * y != f.d) {
                    continue;
                }
                Point pt{Rational(Integer(x), Integer(f.scale)), Rational(Integer(y), Integer(f.scale))};
                if (rep.form.admissible(pt.first, pt.second)) {
                    pts.push_back(pt);
                }
            }
        }
    }
    rep.solutions = std::move(pts);
    rep.complete = true;
    rep.status = rep.solutions.empty() ? Status::NoSolutions : Status::Solutions;
    if (rep.solutions.empty()) {
        rep.certificate_kind = CertificateKind::NegativeDiscriminant;
    }
    return rep;
}

}  // namespace detail

/// Generic certified solver. Dispatch:
///  - beta fixed: univariate, exact rational roots;
///  - homogeneous, discriminant non-square or negative: only (0, 0);
///  - negative discriminant: bounded ellipse, exhaustive;
///  - square discriminant, nonzero right side: finite factorization;
///  - otherwise: modular obstruction search, then bounded search.
[[nodiscard]] inline SolutionReport solve(const QuadraticForm& form, const SolveOptions& opts = {})
{
    form.validate();
    SolutionReport rep;
    rep.form = form;
    rep.search_bound = opts.search_bound;

    if (form.beta_fixed) {
        return detail::solve_fixed_beta(std::move(rep));
    }

    IntegerForm f = integer_form(form);
    Integer disc = f.b * f.b - 4 * f.a * f.c;
    rep.discriminant = disc;

    if (f.d == 0 && (disc < 0 || !is_square(disc)) && (f.a != 0 || f.c != 0)) {
        rep.complete = true;
        if (form.admissible(0, 0)) {
            rep.status = Status::Solutions;
            rep.solutions.emplace_back(Rational(0), Rational(0));
        } else {
            rep.status = Status::NoSolutions;
            rep.certificate_kind =
                disc < 0 ? CertificateKind::NegativeDiscriminant : CertificateKind::NonSquareDiscriminant;
        }
        rep.evidence.push_back("homogeneous form with discriminant " + disc.str()
                               + (disc < 0 ? " < 0" : " not a perfect square")
                               + ": the only rational zero is (0, 0)");
        if (rep.status == Status::NoSolutions) {
            rep.evidence.push_back("(0, 0) violates the sign constraint");
        }
        return rep;
    }

    if (disc < 0 && f.d != 0) {
        return detail::solve_definite(std::move(rep), f);
    }

    if (f.d != 0 && disc > 0) {
        if (auto s = exact_sqrt(disc)) {
            return detail::solve_factorization(std::move(rep), f, *s);
        }
    }

    if (f.d != 0) {
        if (auto cert = modular_obstruction_search(form, opts.modulus_bound)) {
            rep.status = Status::NoSolutions;
            rep.complete = true;
            rep.certificate_kind = CertificateKind::ModularObstruction;
            rep.evidence.push_back("no solution modulo " + std::to_string(cert->modulus) + ": residue "
                                   + std::to_string(cert->target_residue) + " is not attained");
            rep.modular = std::move(cert);
            return rep;
        }
        rep.evidence.push_back("no modular obstruction up to modulus " + std::to_string(opts.modulus_bound));
    } else {
        rep.evidence.push_back("homogeneous form with square discriminant " + disc.str()
                               + ": solutions lie on rational lines through the origin");
    }
    rep.solutions = detail::box_search(form, opts.search_bound);
    rep.status = rep.solutions.empty() ? Status::Unresolved : Status::Solutions;
    return rep;
}

/// Independent replay of the certificate (or of the listed solutions).
[[nodiscard]] inline bool verify_certificate(const SolutionReport& rep)
{
    const auto& form = rep.form;
    for (const auto& [x, y] : rep.solutions) {
        if (!form.satisfied_by(x, y) && !rep.side_condition) {
            return false;
        }
    }
    if (rep.status != Status::NoSolutions) {
        return rep.status == Status::Unresolved ? rep.certificate_kind == CertificateKind::None : true;
    }
    IntegerForm f = integer_form(form);
    switch (rep.certificate_kind) {
    case CertificateKind::ModularObstruction: {
        if (!rep.modular) {
            return false;
        }
        const std::int64_t m = rep.modular->modulus;
        if (m < 2 || detail::mod(f.d, m) != rep.modular->target_residue) {
            return false;
        }
        std::set<std::int64_t> seen;
        for (std::int64_t x = 0; x < m; ++x) {
            for (std::int64_t y = 0; y < m; ++y) {
                seen.insert(detail::mod(f.a * x * x + f.b * x * y + f.c * y * y, m));
            }
        }
        std::vector<std::int64_t> table(seen.begin(), seen.end());
        return !seen.contains(rep.modular->target_residue) && table == rep.modular->attained_residues;
    }
    case CertificateKind::NegativeDiscriminant:
    case CertificateKind::NonSquareDiscriminant:
    case CertificateKind::FiniteFactorization: {
        // Re-solve from scratch; the dispatch is deterministic in the form.
        SolveOptions opts;
        opts.search_bound = rep.search_bound;
        SolutionReport again = solve(form, opts);
        return again.status == Status::NoSolutions && again.certificate_kind == rep.certificate_kind;
    }
    case CertificateKind::FiniteRootSet: {
        SolutionReport again = solve(form);
        return again.status == Status::NoSolutions && again.certificate_kind == CertificateKind::FiniteRootSet;
    }
    case CertificateKind::Divisibility:
        // Side-condition certificates are replayed by the caller that owns the
        // side condition; here only the absence of listed solutions is checked.
        return rep.solutions.empty() && rep.side_condition.has_value();
    case CertificateKind::None: return false;
    }
    return false;
}

// -- genus-12 relations --------------------------------------------------

inline void require_v22(const Rational& kcube)
{
    if (kcube != 22) {
        throw Error(ErrorCode::UnsupportedKcube,
                    "link relations are derived only for (-K)^3 = 22, got " + to_string(kcube));
    }
}

/// Admissible del Pezzo fibre degrees: 1..9 without 7.
[[nodiscard]] inline bool is_del_pezzo_degree(const Rational& k)
{
    return is_integer(k) && k >= 1 && k <= 9 && k != 7;
}

/// One side of type e5. For an effective D = alpha(-K) - beta E with E the
/// exceptional plane, (-K).D^2 = (-K)^3 a^2 - 2 (K^2.E) a b + ((-K).E^2) b^2,
/// and (-K).D^2 = 2 delta for the other side's distinguished divisor
/// (delta = 1, 0, -1 for types c, d, e5).
[[nodiscard]] inline SolutionReport solve_e5_pair(const Rational& kcube, int delta,
                                                  std::optional<int> beta_constraint = std::nullopt,
                                                  const SolveOptions& opts = {})
{
    require_v22(kcube);
    if (delta < -1 || delta > 1) {
        throw Error(ErrorCode::InvalidArgument, "delta must be one of 1, 0, -1");
    }
    auto e5 = icalc::point_blowup_case(icalc::PointBlowupKind::E5, kcube + rat(1, 2));
    const Rational k_e_e = -2;  // (-K).E^2 for an exceptional plane with normal bundle O(-2)
    QuadraticForm form;
    form.a = kcube / 2;
    form.b = -e5.ksq_e;
    form.c = k_e_e / 2;
    form.d = delta;
    form.alpha_sign = Sign::Positive;
    form.beta_sign = Sign::NonNegative;
    if (beta_constraint) {
        form.beta_fixed = Rational(*beta_constraint);
    }
    return solve(form, opts);
}

/// Both sides conic bundles over P^2. F = f^*(line): (-K).F^2 = 2 and
/// (-K)^2.F = 12 - deg(Delta). L = alpha(-K) - beta F with (-K).L^2 = 2.
/// Halves are allowed only for an empty discriminant.
[[nodiscard]] inline SolutionReport solve_cc(const Rational& kcube, int deg_delta,
                                             std::optional<int> beta_constraint = std::nullopt,
                                             const SolveOptions& opts = {})
{
    require_v22(kcube);
    if (deg_delta < 0) {
        throw Error(ErrorCode::InvalidArgument, "discriminant degree must be nonnegative");
    }
    QuadraticForm form;
    form.a = kcube / 2;
    form.b = -(12 - deg_delta);
    form.c = 1;
    form.d = 1;
    form.alpha_sign = Sign::Positive;
    form.beta_sign = Sign::Positive;
    if (deg_delta == 0) {
        form.alpha_denominators = {1, 2};
        form.beta_denominators = {1, 2};
    }
    if (beta_constraint) {
        form.beta_fixed = Rational(*beta_constraint);
    }
    SolutionReport rep = solve(form, opts);
    if (deg_delta == 0 && !beta_constraint) {
        rep.evidence.insert(rep.evidence.begin(),
                            "equivalent to 1 + 25 a^2 = (6a - b)^2, i.e. (a - b)(11a - b) = 1");
    }
    if (beta_constraint && *beta_constraint == 1 && rep.status == Status::Solutions) {
        rep.evidence.push_back("with beta = 1 the relation reads 12 = 11 alpha + deg(Delta)");
        for (const auto& [alpha, beta] : rep.solutions) {
            if (alpha == 1 && deg_delta == 1) {
                rep.geometric_exclusion = "discriminant line contradicts extremality";
            }
        }
    }
    return rep;
}

/// Conic bundle (left) against a del Pezzo fibration (right): L is the strict
/// transform of a fibre, so (-K).L^2 = 0 and K_{L}^2 = (-K)^2.L.
[[nodiscard]] inline SolutionReport solve_cd(const Rational& kcube, int deg_delta, const SolveOptions& opts = {})
{
    require_v22(kcube);
    if (deg_delta < 0) {
        throw Error(ErrorCode::InvalidArgument, "discriminant degree must be nonnegative");
    }
    const int fdeg = 12 - deg_delta;  // (-K)^2.F
    QuadraticForm form;
    form.a = kcube / 2;
    form.b = -fdeg;
    form.c = 1;
    form.d = 0;
    form.alpha_sign = Sign::Positive;
    if (deg_delta == 0) {
        form.alpha_denominators = {1, 2};
        form.beta_denominators = {1, 2};
    }
    SolutionReport rep = solve(form, opts);
    rep.side_condition = "fibre degree (-K)^2.L = " + to_string(kcube) + "*a - " + std::to_string(fdeg)
                         + "*b must be a del Pezzo degree";
    if (rep.status != Status::Solutions) {
        return rep;
    }
    std::set<int> degrees;
    for (const auto& [alpha, beta] : rep.solutions) {
        Rational k = kcube * alpha - fdeg * beta;
        if (is_del_pezzo_degree(k)) {
            degrees.insert(num(k).convert_to<int>());
            rep.evidence.push_back("(" + to_string(alpha) + ", " + to_string(beta) + ") gives fibre degree "
                                   + to_string(k));
        }
    }
    const Rational disc = form.discriminant();
    if (auto s = exact_sqrt(num(disc))) {
        for (int sign : {-1, 1}) {
            Rational ratio = (Rational(fdeg) + sign * Rational(*s)) / kcube;  // alpha/beta
            if (ratio == 0) {
                continue;
            }
            Rational per_beta = kcube * ratio - fdeg;  // fibre degree = per_beta * beta
            rep.evidence.push_back("root alpha/beta = " + to_string(ratio) + " gives fibre degree "
                                   + to_string(per_beta) + "*beta"
                                   + (per_beta * ratio <= 0 ? ", nonpositive for alpha > 0: discarded" : ""));
        }
    }
    if (degrees.size() == 1) {
        rep.fiber_degree = *degrees.begin();
    } else if (degrees.empty()) {
        rep.evidence.push_back("no lattice point yields a del Pezzo fibre degree");
    }
    return rep;
}

/// Two del Pezzo fibrations. With fibre F on the left, (-K).F^2 = 0 and
/// (-K)^2.F = K_F^2; for L the strict transform of a right fibre the
/// relations force K_{F+}^2 = 11 alpha, which no admissible alpha satisfies.
[[nodiscard]] inline SolutionReport solve_dd(const Rational& kcube, int fiber_sq_left, const SolveOptions& opts = {})
{
    require_v22(kcube);
    if (fiber_sq_left < 1 || fiber_sq_left > 9) {
        throw Error(ErrorCode::InvalidFiberDegree, "del Pezzo fibre degree must lie in 1..9");
    }
    QuadraticForm form;
    form.a = kcube / 2;
    form.b = -fiber_sq_left;
    form.c = 0;
    form.d = 0;
    form.alpha_sign = Sign::Positive;
    form.alpha_denominators = {1, 2, 3};
    form.beta_denominators = {1, 2, 3};

    SolutionReport rep;
    rep.form = form;
    rep.search_bound = opts.search_bound;
    rep.discriminant = integer_form(form).b * integer_form(form).b;
    rep.side_condition = "K_{F+}^2 = " + to_string(kcube) + "*a - " + std::to_string(fiber_sq_left)
                         + "*b must be a del Pezzo degree";
    if (fiber_sq_left == 7) {
        rep.evidence.push_back("7 is not the degree of a del Pezzo fibre; the arithmetic is run regardless");
    }
    rep.evidence.push_back("alpha > 0 forces " + to_string(kcube / 2) + "*a = " + std::to_string(fiber_sq_left)
                           + "*b, hence K_{F+}^2 = " + to_string(kcube / 2) + "*a");
    bool any = false;
    for (int k = 1; k <= 9; ++k) {
        Rational alpha = Rational(k) / (kcube / 2);
        bool den_ok = den(alpha) <= 3;
        rep.evidence.push_back("K_{F+}^2 = " + std::to_string(k) + " needs alpha = " + to_string(alpha)
                               + (den_ok ? " (admissible)" : ", denominator not in {1,2,3}"));
        any = any || (den_ok && k != 7);
    }
    if (any) {
        throw Error(ErrorCode::InvalidArgument, "unexpected admissible del Pezzo degree");
    }
    rep.status = Status::NoSolutions;
    rep.complete = true;
    rep.certificate_kind = CertificateKind::Divisibility;
    rep.evidence.push_back("K_{F+}^2 must be divisible by " + to_string(kcube / 2));
    return rep;
}

}  // namespace sarkisov::linkeq
