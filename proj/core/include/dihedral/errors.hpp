#pragma once
#include <stdexcept>
#include <string>

namespace dih {

// invalid caller input (bad spec, bad diagram, bad p)
struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// a computed quantity violated a theorem we rely on; signals a bug
struct Inconsistency : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotNullhomologous : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SingularForm : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidInput(what);
}

}  // namespace dih
