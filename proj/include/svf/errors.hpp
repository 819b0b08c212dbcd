#pragma once

#include <stdexcept>
#include <string>

namespace svf {

// Malformed text, unknown names, out-of-range sizes. Maps to exit code 1.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A closed-form expression hit a vanishing denominator or a degenerate
// parameter combination. First-class result, not a crash; maps to exit
// code 2. `factor()` names the quantity that vanished, `context()` the
// formula it vanished in.
class EvalError : public std::runtime_error {
 public:
  enum class Kind { pole, degeneracy };

  EvalError(Kind kind, std::string factor, std::string context)
      : std::runtime_error(describe(kind, factor, context)),
        kind_(kind),
        factor_(std::move(factor)),
        context_(std::move(context)) {}

  Kind kind() const noexcept { return kind_; }
  const std::string& factor() const noexcept { return factor_; }
  const std::string& context() const noexcept { return context_; }
  const char* kind_name() const noexcept {
    return kind_ == Kind::pole ? "pole" : "degeneracy";
  }

 private:
  static std::string describe(Kind kind, const std::string& factor,
                              const std::string& context) {
    std::string s = kind == Kind::pole ? "pole: " : "degeneracy: ";
    s += factor;
    if (!context.empty()) {
      s += " in ";
      s += context;
    }
    return s;
  }

  Kind kind_;
  std::string factor_;
  std::string context_;
};

inline EvalError pole_error(std::string factor, std::string context) {
  return EvalError(EvalError::Kind::pole, std::move(factor),
                   std::move(context));
}

inline EvalError degeneracy_error(std::string factor, std::string context) {
  return EvalError(EvalError::Kind::degeneracy, std::move(factor),
                   std::move(context));
}

}  // namespace svf
