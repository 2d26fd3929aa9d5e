#include "unipv/variable.hpp"

namespace unipv {

std::string Variable::text() const {
  switch (kind_) {
    case VarKind::Z:
      return "z";
    case VarKind::Param:
      return "a" + std::to_string(row_);
    case VarKind::X:
      return "x[" + std::to_string(row_) + "," + std::to_string(col_) + "]";
  }
  return "?";
}

std::string Variable::latex() const {
  switch (kind_) {
    case VarKind::Z:
      return "z";
    case VarKind::Param:
      return "\\alpha_{" + std::to_string(row_) + "}";
    case VarKind::X:
      return "x_{" + std::to_string(row_) + "," + std::to_string(col_) + "}";
  }
  return "?";
}

}  // namespace unipv
