#pragma once

// Constructive equivalence certificates: matrices P with P^t F P = Q.

#include <array>
#include <cstdint>
#include <optional>

#include "formhasse/exact.hpp"
#include "formhasse/qforms.hpp"

namespace formhasse {

/// d = w^2 + x^2 + y^2 + z^2 with w >= x >= y >= z >= 0.
struct FourSquares {
  long w = 0, x = 0, y = 0, z = 0;
  long sum() const { return w * w + x * x + y * y + z * z; }
  friend bool operator==(const FourSquares&, const FourSquares&) = default;
};

/// The lexicographically largest ordered decomposition.
FourSquares four_squares(long d);

/// Right-regular representation of the quaternion w + xi + yj + zij:
/// B * B^t = d * I and det B = d^2.
KMatrix quaternion_block(const FourSquares& q);

/// An invertible matrix p with p^t * source * p == target, checked exactly
/// on construction. There is no way to hold an unverified witness.
class Witness {
 public:
  static Witness make(KMatrix p, Form source, Form target);

  const KMatrix& matrix() const { return p_; }
  const Form& source() const { return source_; }
  const Form& target() const { return target_; }
  K5Elem determinant() const { return p_.determinant(); }

 private:
  Witness(KMatrix p, Form source, Form target)
      : p_(std::move(p)), source_(std::move(source)), target_(std::move(target)) {}

  KMatrix p_;
  Form source_;
  Form target_;
};

/// The 7x7 matrix A_d (quaternion block of a four-squares decomposition of d,
/// then I_3) with A_d F A_d^t = Q_d for F = <1,1,1,1,1,1,-1> and
/// Q_d = <d,d,d,d,1,1,-1>; the witness stores p = A_d^t.
Witness build_Ad(long d);

/// The displayed A_d itself (p^t of the witness).
KMatrix Ad_matrix(long d);

struct WitnessSearch {
  long bound = 12;
  /// Denominators tried for each vector, in order.
  std::vector<long> denominators{1, 2, 3};
  /// Candidates tried per level before backtracking gives up.
  int max_candidates = 64;
};

/// Represent-and-split: find v with F(v) = first entry of Q over a coordinate
/// box, recurse on its orthogonal complement. nullopt when the search fails
/// within the bound. Both forms must be diagonal over Q of equal dimension.
std::optional<Witness> find_witness(const DiagForm& source, const DiagForm& target, const WitnessSearch& opts = {});
std::optional<Witness> find_witness(const DiagForm& source, const DiagForm& target, long bound);

/// Identity with m written at rows/cols [offset, offset + k).
KMatrix embed_block(const KMatrix& m, std::size_t n, std::size_t offset);

/// embed_block that also checks the result preserves `form` when m
/// preserves the restriction of `form` to the block.
KMatrix embed_block(const KMatrix& m, std::size_t n, std::size_t offset, const Form& form);

/// m^t * gram * m == gram.
bool preserves(const KMatrix& m, const Form& f);

struct Conjugated {
  KMatrix matrix;
  bool integral = false;
  K5Elem determinant;
};

/// p * m * p^-1 for an isometry m of the witness target; the result is
/// checked to preserve the witness source.
Conjugated conjugate_isometry(const Witness& wit, const KMatrix& m);

/// Whether every entry is an integer (or lies in Z[phi] for K5 entries).
bool is_integral(const KMatrix& m);

}  // namespace formhasse
