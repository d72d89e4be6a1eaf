#pragma once

#include "cubelaw/oriented_ideal.hpp"

#include <string>
#include <vector>

namespace cubelaw {

/// a x^2 + b xy + c y^2 over O_K.
struct QuadForm {
  BaseElement a, b, c;

  const FieldDescriptor& field() const { return a.field(); }
  friend bool operator==(const QuadForm&, const QuadForm&) = default;
};

QuadForm make_form(const FieldDescriptor& f, long a, long b, long c);
/// Lexicographic order on (a, b, c); defined for K = Q.
bool form_lex_less(const QuadForm& x, const QuadForm& y);

BaseElement disc_form(const QuadForm& Q);
bool is_primitive(const QuadForm& Q);
QuadForm negate_form(const QuadForm& Q);
QuadForm scale_form(const QuadForm& Q, const BaseElement& k);

/// Q(p x + q y, r x + s y), no conditions on T.
QuadForm substitute_form(const QuadForm& Q, const Mat2& T);
/// u * Q(p x + q y, r x + s y) with det T and u totally positive units.
QuadForm act_form(const QuadForm& Q, const Mat2& T, const BaseElement& u);
QuadForm act_form(const QuadForm& Q, const Mat2& T);

QuadForm identity_form(const ExtensionPtr& ext);
QuadForm inverse_form(const QuadForm& Q);

/// ([a, (-b + sqrt disc)/2]; sgn a). Requires a primitive form with disc in the
/// orbit u^2 D; a zero leading coefficient is moved by (x, y) -> (x, y + kx).
OrientedIdeal psi_map(const QuadForm& Q, const ExtensionPtr& ext);
/// (N(alpha) x^2 - Tr(conj(alpha) beta) xy + N(beta) y^2) / det M for aligned I.
QuadForm phi_map(const OrientedIdeal& I);
QuadForm compose_forms(const QuadForm& Q1, const QuadForm& Q2, const ExtensionPtr& ext);

// ---- K = Q reduction theory ------------------------------------------------

struct FormReduction {
  QuadForm form;   // canonical representative of the narrow class
  Mat2 transform;  // act_form(input, transform) == form
};

FormReduction reduce_form(const QuadForm& Q);
bool is_reduced(const QuadForm& Q);
bool equivalent_forms(const QuadForm& Q1, const QuadForm& Q2);
/// T with act_form(Q1, T) == Q2 when the forms are narrowly equivalent.
std::optional<Mat2> equivalence_transform(const QuadForm& Q1, const QuadForm& Q2);
/// The reduction cycle containing the reduced indefinite form Q.
std::vector<QuadForm> reduction_cycle(const QuadForm& Q);

inline constexpr long kEnumerateBound = 1'000'000;

/// One representative per narrow class of primitive forms of fundamental
/// discriminant D (definite D: positive and negative definite forms).
std::vector<QuadForm> enumerate_reduced(const Int& D);
std::vector<QuadForm> enumerate_reduced_serial(const Int& D);

struct ClassGroupTable {
  Int disc;
  /// Positive definite representatives (D < 0) or one form per cycle (D > 0).
  std::vector<QuadForm> reps;
  /// table[i][j] = index of the class of reps[i] * reps[j].
  std::vector<std::vector<int>> table;
  int identity = 0;
  /// Order of the oriented class group (2h for D < 0, h for D > 0).
  int oriented_order = 0;
};

ClassGroupTable class_group_table(const Int& D);
/// Whether the table is a commutative group table with the given identity.
bool is_group_table(const ClassGroupTable& t);

std::string to_string(const QuadForm& Q);

}  // namespace cubelaw
