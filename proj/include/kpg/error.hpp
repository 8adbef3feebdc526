#ifndef KPG_ERROR_HPP
#define KPG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace kpg {

/// Domain error with a stable machine-readable code ("NotComposable",
/// "DegreeOutOfRange", ...) next to the human message.
class error : public std::runtime_error {
  public:
    error(std::string code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

  private:
    std::string code_;
};

}  // namespace kpg

#endif
