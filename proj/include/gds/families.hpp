#ifndef GDS_FAMILIES_HPP
#define GDS_FAMILIES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gds/number_theory.hpp"
#include "gds/rational.hpp"

namespace gds
{

enum class Family
{
  PSL2,
  PSL3,
  PSU3,
  Suzuki,     // ²B₂(q), q = 2^(2n+1), n >= 1
  Ree,        // ²G₂(q), q = 3^(2n+1), n >= 1
  TrialityD4, // ³D₄(q)
};

std::string to_string(Family f);
/// Accepts "psl2", "psl3", "psu3", "suzuki", "ree", "triality" (case-insensitive).
Family family_from_string(std::string const &name);

/// A simple group of Lie type by family and field size, validated at construction.
class FamilySpec
{
public:
  /// Throws DomainError for parameters outside the family.
  FamilySpec(Family family, std::uint64_t q);

  Family family() const { return family_; }
  std::uint64_t q() const { return q_; }
  std::uint64_t characteristic() const { return p_; }
  /// gcd(2, q−1) for PSL2, gcd(3, q−1) for PSL3, gcd(3, q+1) for PSU3, else 1.
  std::uint64_t d_divisor() const { return divisor_; }

  /// Order as (factor, exponent) pairs whose product, divided by d_divisor(), is |G|.
  /// Factors are small cyclotomic-style values so each fits in 64 bits for q <= 2^10.
  std::vector<std::pair<BigInt, unsigned>> order_factors() const;

private:
  Family family_;
  std::uint64_t q_;
  std::uint64_t p_;
  std::uint64_t divisor_ = 1;
};

/// Closed-form order.
BigInt family_order(FamilySpec const &spec);

struct FamilyD
{
  Rational value;
  bool is_bound = false; // value is an upper bound on k/|G| rather than its exact value
};

/// Commuting probability (or upper bound) from the closed forms:
/// PSL2 even q: 1/((q−1)q); odd q: (q+5)/((q²−1)q); PSL3(3): 1/468;
/// PSL3, q >= 4: (q²+3q) / ((1/3) q³(q²−1)(q³−1)) [bound];
/// PSU3: (q²+q+2) / ((1/d) q³(q²−1)(q³+1)) [bound];
/// Suzuki: (q+3)/(q²(q²+1)(q−1)); Ree: (q+8)/(q³(q³+1)(q−1));
/// ³D₄: (q⁴+q³+q²+q+6)/(q¹²(q⁸+q⁴+1)(q⁶−1)(q²−1)).
FamilyD family_d(FamilySpec const &spec);

struct FamilyInvariants
{
  BigInt order;
  BigInt class_number;
  bool class_number_is_bound = false;
  Rational d_value;
  bool d_is_bound = false;
  std::optional<BigInt> largest_prime; // absent when factoring ran out of budget
};

FamilyInvariants family_invariants(FamilySpec const &spec, FactorOptions const &options = {});

/// Largest prime dividing the order, computed from order_factors().
std::optional<BigInt> largest_prime_divisor(FamilySpec const &spec, FactorOptions const &options = {});

struct SweepRow
{
  Family family;
  std::uint64_t q;
  BigInt order;
  std::optional<BigInt> p;
  Rational d;
  bool bound_flag = false;
  bool d_below_threshold = false; // d < 3/p²
  bool lemma31_holds = false;     // p²/3 < |G|^(1/2), i.e. p⁴ < 9|G|
  std::string notice;             // non-empty when the row was skipped
};

/// Every valid q <= q_max for the family, ascending.
std::vector<std::uint64_t> valid_parameters(Family family, std::uint64_t q_max);

/// Evaluates each valid q <= q_max. Rows that could not be factored carry a notice.
std::vector<SweepRow> bound_sweep(Family family, std::uint64_t q_max, FactorOptions const &options = {});

/// For Suzuki q: the largest prime divisor of q²+1 is at most (q²+1)/3.
bool suzuki_cofactor_check(std::uint64_t q, FactorOptions const &options = {});

} // namespace gds

#endif // GDS_FAMILIES_HPP
