#ifndef SDECOMP_CACHE_HPP
#define SDECOMP_CACHE_HPP

#include <filesystem>
#include <optional>
#include <string>

#include "sdecomp/report.hpp"

namespace sdecomp {

std::uint64_t fnv1a(std::string_view data) noexcept;

/// File-per-entry result cache. Entries carry the key, a version stamp and a
/// checksum of the payload; anything that does not match reads as a miss.
/// I/O failures are swallowed so callers fall back to recomputation.
class ResultCache {
   public:
    explicit ResultCache(std::filesystem::path dir, std::string version = default_version());

    /// $SDECOMP_CACHE_DIR, else $XDG_CACHE_HOME/sdecomp, else ~/.cache/sdecomp.
    static std::filesystem::path default_dir();
    static std::string default_version();

    /// Serialized (p, n, modulus, subcommand, params).
    static std::string make_key(const FieldCtx& f, const std::string& subcommand, const Json& params);

    std::optional<Json> get(const std::string& key) const;
    bool put(const std::string& key, const Json& payload) const;

    const std::filesystem::path& dir() const noexcept { return dir_; }
    std::filesystem::path entry_path(const std::string& key) const;

   private:
    std::filesystem::path dir_;
    std::string version_;
};

}  // namespace sdecomp

#endif  // SDECOMP_CACHE_HPP
