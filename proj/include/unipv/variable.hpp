#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace unipv {

enum class VarKind : std::uint8_t { Z = 0, Param = 1, X = 2 };

/// A ring variable: the independent variable z, a parameter a_i, or a generator x[i,j].
///
/// Variables are totally ordered z < a1 < a2 < ... < x[1,1] < x[1,2] < ... < x[2,1] < ...
/// which fixes the variable order used by every monomial comparison.
class Variable {
 public:
  constexpr Variable() = default;

  static constexpr Variable z() { return Variable(VarKind::Z, 0, 0); }
  static constexpr Variable param(unsigned i) { return Variable(VarKind::Param, i, 0); }
  static constexpr Variable x(unsigned row, unsigned col) { return Variable(VarKind::X, row, col); }

  constexpr VarKind kind() const { return kind_; }
  constexpr unsigned index() const { return row_; }
  constexpr unsigned row() const { return row_; }
  constexpr unsigned col() const { return col_; }

  constexpr bool is_z() const { return kind_ == VarKind::Z; }
  constexpr bool is_param() const { return kind_ == VarKind::Param; }
  constexpr bool is_x() const { return kind_ == VarKind::X; }

  constexpr std::uint32_t key() const {
    return (static_cast<std::uint32_t>(kind_) << 24) | (static_cast<std::uint32_t>(row_) << 12) | col_;
  }

  friend constexpr bool operator==(Variable a, Variable b) { return a.key() == b.key(); }
  friend constexpr std::strong_ordering operator<=>(Variable a, Variable b) { return a.key() <=> b.key(); }

  /// Canonical text: z, a3, x[2,1].
  std::string text() const;
  /// LaTeX: z, \alpha_{3}, x_{2,1}.
  std::string latex() const;

 private:
  constexpr Variable(VarKind kind, unsigned row, unsigned col)
      : kind_(kind), row_(static_cast<std::uint16_t>(row)), col_(static_cast<std::uint16_t>(col)) {}

  VarKind kind_ = VarKind::Z;
  std::uint16_t row_ = 0;
  std::uint16_t col_ = 0;
};

}  // namespace unipv
