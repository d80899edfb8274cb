#include "koszuldual/errors.hpp"

namespace koszuldual {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::NonComposable: return "NonComposable";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::NotOneCycle: return "NotOneCycle";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::SemanticError: return "SemanticError";
    case ErrorKind::NotTriangular: return "NotTriangular";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::NotSinkOrSource: return "NotSinkOrSource";
    case ErrorKind::HasOrientedCycle: return "HasOrientedCycle";
    case ErrorKind::OutOfScope: return "OutOfScope";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "?";
}

}  // namespace koszuldual
