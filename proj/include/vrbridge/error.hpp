#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace vrbridge {

/// Malformed or out-of-contract input (unknown ids, parse errors, bad sizes).
class InputError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/**
 * A finite continuity certificate could not be produced or a sufficient
 * condition failed on concrete data. Carries the witnessing pair of samples
 * (or vertices) so callers can report the counterexample.
 */
class CertificateError : public std::runtime_error {
  public:
    struct Witness {
        std::size_t first = 0;
        std::size_t second = 0;
        std::size_t first_value = 0;
        std::size_t second_value = 0;
    };

    CertificateError(const std::string& what, Witness witness,
                     std::optional<std::size_t> stage = std::nullopt)
        : std::runtime_error(what), witness_(witness), stage_(stage)
    {
    }

    const Witness& witness() const noexcept { return witness_; }
    std::optional<std::size_t> stage() const noexcept { return stage_; }

  private:
    Witness witness_;
    std::optional<std::size_t> stage_;
};

}  // namespace vrbridge
