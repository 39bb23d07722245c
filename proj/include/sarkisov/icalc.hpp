#pragma once

// Exact intersection calculus on rank-2 Picard lattices: blowups of curves
// and points on Fano threefolds, and projectivised rank-2 bundles over P^2.

#include "sarkisov/error.hpp"
#include "sarkisov/rational.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace sarkisov::icalc {

/// g with (-K)^3 = 2g - 2. Throws NonIntegralGenus when no integer g exists.
[[nodiscard]] inline Integer genus_of(const Rational& kcube)
{
    Rational g = kcube / 2 + 1;
    if (!is_integer(g)) {
        throw Error(ErrorCode::NonIntegralGenus,
                    "(-K)^3 = " + to_string(kcube) + " gives non-integral genus " + to_string(g));
    }
    return num(g);
}

struct FanoInvariants
{
    Rational kcube;
    int rho = 1;
    int cl_rank = 1;
    int iota = 1;
    std::optional<Integer> genus;

    static FanoInvariants make(Rational kcube, int rho, int cl_rank, int iota)
    {
        if (kcube <= 0) {
            throw Error(ErrorCode::InvalidArgument, "Fano threefold needs (-K)^3 > 0");
        }
        if (rho < 1 || iota < 1 || cl_rank < rho) {
            throw Error(ErrorCode::InvalidArgument, "need rho >= 1, iota >= 1, cl_rank >= rho");
        }
        FanoInvariants f{std::move(kcube), rho, cl_rank, iota, std::nullopt};
        Rational g = f.kcube / 2 + 1;
        if (is_integer(g)) {
            f.genus = num(g);
        }
        return f;
    }
};

/// A Picard-rank-one Fano threefold presented by its index and H^3.
struct AmbientFano
{
    std::string name;
    int iota = 1;
    Rational hcube;

    [[nodiscard]] Rational kcube() const { return Rational(iota * iota * iota) * hcube; }

    [[nodiscard]] FanoInvariants invariants() const { return FanoInvariants::make(kcube(), 1, 1, iota); }
};

namespace ambient {
inline AmbientFano projective_space() { return {"P3", 4, rat(1)}; }
inline AmbientFano quadric() { return {"Q", 3, rat(2)}; }
/// Del Pezzo threefold of degree d (V5 for d = 5, the (2,2) complete intersection V4 for d = 4).
inline AmbientFano del_pezzo(int degree) { return {"V" + std::to_string(degree), 2, rat(degree)}; }
}  // namespace ambient

struct CurveData
{
    int h_degree = 1;  // H.B
    int pa = 0;
};

/// Divisor class in a rank-2 basis. Coordinates may be fractional only with
/// denominators dividing 6 (halves and thirds, as licensed by mu_f).
class DivisorClass
{
public:
    DivisorClass() = default;
    DivisorClass(Rational first, Rational second)
        : coords_{std::move(first), std::move(second)}
    {
        for (const auto& c : coords_) {
            if (!denominator_divides(c, 6)) {
                throw Error(ErrorCode::InvalidDenominator,
                            "divisor coordinate " + to_string(c) + " has denominator not dividing 6");
            }
        }
    }
    DivisorClass(std::int64_t first, std::int64_t second)
        : DivisorClass(rat(first), rat(second))
    {
    }

    [[nodiscard]] const Rational& operator[](std::size_t i) const { return coords_.at(i); }

    friend DivisorClass operator+(const DivisorClass& x, const DivisorClass& y)
    {
        return {x[0] + y[0], x[1] + y[1]};
    }
    friend DivisorClass operator-(const DivisorClass& x, const DivisorClass& y)
    {
        return {x[0] - y[0], x[1] - y[1]};
    }
    friend DivisorClass operator-(const DivisorClass& x) { return {-x[0], -x[1]}; }
    friend DivisorClass operator*(const Rational& s, const DivisorClass& x) { return {s * x[0], s * x[1]}; }
    friend bool operator==(const DivisorClass& x, const DivisorClass& y) { return x.coords_ == y.coords_; }

private:
    std::array<Rational, 2> coords_{Rational(0), Rational(0)};
};

/// Symmetric trilinear form on a rank-2 lattice. A symmetric form on two
/// generators is fixed by the four monomials x^3, x^2 y, x y^2, y^3.
class IntersectionRing3
{
public:
    IntersectionRing3(std::array<std::string, 2> labels, std::array<Rational, 4> monomials, DivisorClass canonical)
        : labels_(std::move(labels))
        , monomials_(std::move(monomials))
        , canonical_(std::move(canonical))
    {
    }

    [[nodiscard]] const std::array<std::string, 2>& basis_labels() const { return labels_; }

    /// T(i,j,k) for i,j,k in {0,1}.
    [[nodiscard]] const Rational& entry(int i, int j, int k) const
    {
        if ((i | j | k) & ~1) {
            throw Error(ErrorCode::InvalidArgument, "basis index out of range");
        }
        return monomials_[static_cast<std::size_t>(i + j + k)];
    }

    /// Monomial value with `second_power` factors of the second generator.
    [[nodiscard]] const Rational& monomial(int second_power) const
    {
        return monomials_.at(static_cast<std::size_t>(second_power));
    }

    [[nodiscard]] const DivisorClass& canonical_class() const { return canonical_; }
    [[nodiscard]] DivisorClass anticanonical_class() const { return -canonical_; }

    [[nodiscard]] Rational eval(const DivisorClass& a, const DivisorClass& b, const DivisorClass& c) const
    {
        Rational total = 0;
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                for (int k = 0; k < 2; ++k) {
                    total += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)]
                             * c[static_cast<std::size_t>(k)] * entry(i, j, k);
                }
            }
        }
        return total;
    }

    [[nodiscard]] Rational anticanonical_cube() const
    {
        auto minus_k = anticanonical_class();
        return eval(minus_k, minus_k, minus_k);
    }

private:
    std::array<std::string, 2> labels_;
    std::array<Rational, 4> monomials_;
    DivisorClass canonical_;
};

[[nodiscard]] inline Rational eval_trilinear(const IntersectionRing3& ring, const DivisorClass& a,
                                             const DivisorClass& b, const DivisorClass& c)
{
    return ring.eval(a, b, c);
}

struct BlowupIdentities
{
    Rational kcube_v;  // (-K_V)^3
    Rational ksq_e;    // (-K_V)^2 . E
    Rational k_e_e;    // (-K_V) . E^2

    friend bool operator==(const BlowupIdentities&, const BlowupIdentities&) = default;
};

/// Numerics of the blowup V -> W of a locally planar curve B, from (-K_W)^3,
/// K_W.B and p_a(B). Usable for ambients of any Picard rank.
[[nodiscard]] inline BlowupIdentities blowup_identities(const Rational& base_kcube, const Rational& kb, int pa)
{
    return {base_kcube + 2 * kb + 2 * pa - 2, -kb - 2 * pa + 2, Rational(2 * pa - 2)};
}

/// Ring of the blowup Y of a curve B on a rank-one Fano Z, basis (H*, E).
///
///   H*^3 = H^3,  H*^2.E = 0,  H*.E^2 = -(H.B),  E^3 = K_Z.B - 2 p_a(B) + 2,
///   K_Y = -iota H* + E.
///
/// E^3 is not an independent input: expanding (-K_Y)^3 = (iota H* - E)^3 with
/// the first three entries and matching (-K_Z)^3 + 2 K_Z.B + 2 p_a - 2 leaves
/// exactly this value.
[[nodiscard]] inline IntersectionRing3 curve_blowup_ring(const AmbientFano& base, const CurveData& curve)
{
    if (curve.h_degree < 1) {
        throw Error(ErrorCode::InvalidArgument, "curve must have positive degree");
    }
    Rational kz_b = Rational(-base.iota * curve.h_degree);
    return IntersectionRing3({"H*", "E"},
                             {base.hcube, Rational(0), Rational(-curve.h_degree), kz_b - 2 * curve.pa + 2},
                             DivisorClass(rat(-base.iota), rat(1)));
}

enum class PointBlowupKind { E2, E3_4, E5 };

[[nodiscard]] inline std::string to_string(PointBlowupKind kind)
{
    switch (kind) {
    case PointBlowupKind::E2: return "e2";
    case PointBlowupKind::E3_4: return "e3-4";
    case PointBlowupKind::E5: return "e5";
    }
    return "?";
}

struct PointBlowupNumerics
{
    Rational kcube_v;       // (-K_V)^3
    Rational ksq_e;         // K_V^2 . E
    Rational discrepancy;   // a_E

    friend bool operator==(const PointBlowupNumerics&, const PointBlowupNumerics&) = default;
};

/// Contraction of a surface to a point; base_kcube is (-K_W)^3 of the target.
[[nodiscard]] inline PointBlowupNumerics point_blowup_case(PointBlowupKind kind, const Rational& base_kcube)
{
    switch (kind) {
    case PointBlowupKind::E2: return {base_kcube - 8, rat(4), rat(2)};
    case PointBlowupKind::E3_4: return {base_kcube - 2, rat(2), rat(1)};
    case PointBlowupKind::E5: return {base_kcube - rat(1, 2), rat(1), rat(1, 2)};
    }
    throw Error(ErrorCode::InvalidArgument, "unknown point blowup kind");
}

struct ChernData
{
    int c1sq = 0;
    int c2 = 0;
    int base_ksq = 9;
};

/// Ring of P(E) over P^2 on the basis (M, F): M tautological, F the pullback
/// of a line. With c1(E) = a.l (a^2 = c1sq, a >= 0 chosen):
///   F^3 = 0, M.F^2 = 1, M^2.F = a, M^3 = a^2 - c2,
///   K = -2M + (a - 3) F.
[[nodiscard]] inline IntersectionRing3 projbundle_ring(const ChernData& data)
{
    if (data.base_ksq != 9) {
        throw Error(ErrorCode::UnsupportedBase, "only P^2 (K_Z^2 = 9) is supported, got " + std::to_string(data.base_ksq));
    }
    auto root = exact_sqrt(Integer(data.c1sq));
    if (!root) {
        throw Error(ErrorCode::InvalidArgument,
                    "c1^2 = " + std::to_string(data.c1sq) + " is not the square of a class on P^2");
    }
    Rational a(*root);
    return IntersectionRing3({"M", "F"}, {a * a - data.c2, a, Rational(1), Rational(0)},
                             DivisorClass(rat(-2), a - 3));
}

/// -K^3 of P(E) over a surface Z: 6 K_Z^2 + 2 c1^2 - 8 c2.
[[nodiscard]] inline Rational projbundle_kcube(const ChernData& data)
{
    return Rational(6 * data.base_ksq + 2 * data.c1sq - 8 * data.c2);
}

/// chi(E(n)) for a rank-2 bundle on P^2 with c1 = c1_degree.l.
[[nodiscard]] inline Rational rank2_euler_characteristic(int c1_degree, int c2, int n)
{
    // c1(E(n)) = c1 + 2n, c2(E(n)) = c2 + n c1 + n^2; K_{P^2} = -3l.
    Rational c1n(c1_degree + 2 * n);
    Rational c2n(c2 + n * c1_degree + n * n);
    return (c1n * c1n - 2 * c2n + 3 * c1n) / 2 + 2;
}

}  // namespace sarkisov::icalc
