#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gca {

enum class ErrorKind {
    InvalidShape,
    ShapeMismatch,
    RankMismatch,
    Collision,
    HalvingError,
    QuarteringError,
    NotBinary,
    NotComplementary,
    Trivial,
    NotDisjoint,
    StructureFailed,
    NonPolyphase,
    VerificationFailed,
    EmptySet,
    NotFound,
    MissingSeed,
    ParseError,
};

inline std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::InvalidShape: return "InvalidShape";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::Collision: return "Collision";
    case ErrorKind::HalvingError: return "HalvingError";
    case ErrorKind::QuarteringError: return "QuarteringError";
    case ErrorKind::NotBinary: return "NotBinary";
    case ErrorKind::NotComplementary: return "NotComplementary";
    case ErrorKind::Trivial: return "Trivial";
    case ErrorKind::NotDisjoint: return "NotDisjoint";
    case ErrorKind::StructureFailed: return "StructureFailed";
    case ErrorKind::NonPolyphase: return "NonPolyphase";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::MissingSeed: return "MissingSeed";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Every failure in the library surfaces as this exception; `kind()` is the
/// machine-readable part, `what()` carries context.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), message_(message) {}

    /// Collision errors remember the offending multi-index.
    Error(ErrorKind kind, const std::string& message, std::vector<std::size_t> position)
        : Error(kind, message) {
        position_ = std::move(position);
    }

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }
    [[nodiscard]] const std::vector<std::size_t>& position() const noexcept { return position_; }
    /// what() without the kind prefix.
    [[nodiscard]] const std::string& message() const noexcept { return message_; }

  private:
    ErrorKind kind_;
    std::string message_;
    std::vector<std::size_t> position_;
};

} // namespace gca
