#pragma once

// Quadratic forms over Q and Q(sqrt5): Gram matrices, diagonal forms,
// congruence diagonalization, signatures, determinant square classes and
// isotropy over Q.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "formhasse/exact.hpp"
#include "formhasse/matrix.hpp"

namespace formhasse {

enum class Field { Q, K5 };

std::string to_string(Field f);
Field parse_field(std::string_view text);

using KMatrix = Matrix<K5Elem>;

struct Signature {
  int plus = 0;
  int minus = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

class DiagForm;

/// A non-singular quadratic form given by its symmetric Gram matrix. Entries
/// are stored as K5Elem; a Q-form only ever holds rational entries.
class Form {
 public:
  Form(Field field, KMatrix gram);

  Field field() const { return field_; }
  const KMatrix& gram() const { return gram_; }
  std::size_t dim() const { return gram_.rows(); }
  K5Elem determinant() const { return gram_.determinant(); }

  friend bool operator==(const Form&, const Form&) = default;

 private:
  Field field_;
  KMatrix gram_;
};

/// <a_1, ..., a_n> with every a_i nonzero.
class DiagForm {
 public:
  DiagForm(Field field, std::vector<K5Elem> entries);

  Field field() const { return field_; }
  const std::vector<K5Elem>& entries() const { return entries_; }
  std::size_t dim() const { return entries_.size(); }
  const K5Elem& operator[](std::size_t i) const { return entries_[i]; }
  K5Elem determinant() const;

  Form to_form() const;
  friend bool operator==(const DiagForm&, const DiagForm&) = default;

 private:
  Field field_;
  std::vector<K5Elem> entries_;
};

/// Parses comma-separated entries such as "1,1,1,-7" or "1,1,1,1,-phi".
DiagForm parse_diag(std::string_view text, Field field);
std::string to_string(const DiagForm& d);

/// Shorthand for rational diagonal forms.
DiagForm diag_q(std::initializer_list<long> entries);

Form orthogonal_sum(const Form& f, const Form& g);
DiagForm orthogonal_sum(const DiagForm& f, const DiagForm& g);

struct Diagonalization {
  DiagForm diag;
  KMatrix transform;  // transform^t * gram * transform == diag
};

enum class PivotOrder { Natural, Reversed };

/// Symmetric Gaussian congruence. A zero pivot at position i is repaired by
/// adding the column j > i (smallest j with gram[i][j] != 0) into column i,
/// with coefficient -1 instead of +1 when +1 still leaves a zero pivot.
Diagonalization diagonalize(const Form& f, PivotOrder order = PivotOrder::Natural);

Signature signature_at(const DiagForm& d, Embedding e);
Signature signature_at(const Form& f, Embedding e);

/// Over Q the squarefree integer in det * Q^2. Over Q(sqrt5) a representative
/// of det * K^2 with rational square content removed; compare classes with
/// same_square_class.
K5Elem det_class(const DiagForm& d);
K5Elem det_class(const Form& f);

/// A square root in the field, if x is a square there.
std::optional<K5Elem> sqrt_in_field(const K5Elem& x, Field field);

bool same_square_class(const K5Elem& a, const K5Elem& b, Field field);

/// d is a sum of three integer squares iff d is not 4^t (8k - 1).
bool three_squares_representable(const Int& d);

/// Whether a square class is a square in the completion of Q at v, where
/// v = 0 stands for the real place.
bool is_local_square_Q(const Rat& x, const Int& v);

/// Non-trivial rational zero of a diagonal form over Q (Hasse-Minkowski with
/// the local isotropy criteria in dimensions 2, 3, 4).
bool represents_zero_Q(const DiagForm& d);

/// Over Q(sqrt5) only the decidable shortcuts: false when the form is
/// definite at some real embedding, true when dim >= 5 and indefinite at both
/// embeddings, nullopt otherwise.
std::optional<bool> represents_zero_K5(const DiagForm& d);

}  // namespace formhasse
