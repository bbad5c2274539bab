#pragma once

// Loaders for the `stabkit-surface/v1` and `stabkit-quotient/v1` documents.
// Both are JSON; rationals are written as strings "p/q" (plain integers are
// accepted too). Paths inside a document are relative to that document.

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>

#include "stabkit/equivariant.hpp"
#include "stabkit/lattice.hpp"

namespace stabkit {

/// Throws InputError with "file:line:col: ..." diagnostics.
std::shared_ptr<const SurfaceModel> load_surface(const std::filesystem::path& path);
std::shared_ptr<const SurfaceModel> parse_surface(std::string_view text, const std::string& origin,
                                                  const std::filesystem::path& base_dir);

Quotient load_quotient(const std::filesystem::path& path);
Quotient parse_quotient(std::string_view text, const std::string& origin,
                        const std::filesystem::path& base_dir);

}  // namespace stabkit
