#ifndef KOSZULDUAL_ERRORS_HPP
#define KOSZULDUAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace koszuldual {

enum class ErrorKind {
  NonComposable,
  Disconnected,
  NotOneCycle,
  SyntaxError,
  SemanticError,
  NotTriangular,
  NotHomogeneous,
  NotSinkOrSource,
  HasOrientedCycle,
  OutOfScope,
  InvalidArgument,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, int line = 0, int column = 0)
      : std::runtime_error(what), kind_(kind), line_(line), column_(column) {}

  ErrorKind kind() const { return kind_; }
  int line() const { return line_; }
  int column() const { return column_; }
  /// Syntax and semantic errors are the user's input; everything else is an analysis failure.
  bool is_input_error() const {
    return kind_ == ErrorKind::SyntaxError || kind_ == ErrorKind::SemanticError ||
           kind_ == ErrorKind::InvalidArgument;
  }

 private:
  ErrorKind kind_;
  int line_, column_;
};

}  // namespace koszuldual

#endif
