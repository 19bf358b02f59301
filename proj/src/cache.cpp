#include "sdecomp/cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace sdecomp {

namespace fs = std::filesystem;

std::uint64_t fnv1a(std::string_view data) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

namespace {

std::string hex(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

class DirLock {
   public:
    explicit DirLock(const fs::path& dir) {
        fd_ = ::open((dir / ".lock").c_str(), O_CREAT | O_RDWR | O_CLOEXEC, 0644);
        if (fd_ >= 0 && ::flock(fd_, LOCK_EX) != 0) {
            ::close(fd_);
            fd_ = -1;
        }
    }
    ~DirLock() {
        if (fd_ >= 0) {
            ::flock(fd_, LOCK_UN);
            ::close(fd_);
        }
    }
    DirLock(const DirLock&) = delete;
    DirLock& operator=(const DirLock&) = delete;
    bool ok() const noexcept { return fd_ >= 0; }

   private:
    int fd_ = -1;
};

}  // namespace

ResultCache::ResultCache(fs::path dir, std::string version) : dir_(std::move(dir)), version_(std::move(version)) {}

fs::path ResultCache::default_dir() {
    if (const char* env = std::getenv("SDECOMP_CACHE_DIR"); env && *env) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "sdecomp";
    if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "sdecomp";
    return fs::temp_directory_path() / "sdecomp-cache";
}

std::string ResultCache::default_version() { return tool_version() + "+cache1"; }

std::string ResultCache::make_key(const FieldCtx& f, const std::string& subcommand, const Json& params) {
    return Json{{"p", f.p()}, {"n", f.n()}, {"modulus", f.modulus()}, {"cmd", subcommand}, {"params", params}}.dump();
}

fs::path ResultCache::entry_path(const std::string& key) const { return dir_ / (hex(fnv1a(key)) + ".json"); }

std::optional<Json> ResultCache::get(const std::string& key) const {
    std::ifstream in(entry_path(key));
    if (!in) return std::nullopt;
    std::stringstream ss;
    ss << in.rdbuf();
    const Json entry = Json::parse(ss.str(), nullptr, false);
    if (entry.is_discarded() || !entry.is_object()) return std::nullopt;
    if (entry.value("version", "") != version_ || entry.value("key", "") != key) return std::nullopt;
    if (!entry.contains("payload") || !entry.contains("checksum")) return std::nullopt;
    const Json& payload = entry["payload"];
    if (entry["checksum"] != hex(fnv1a(payload.dump()))) return std::nullopt;
    return payload;
}

bool ResultCache::put(const std::string& key, const Json& payload) const {
    static std::atomic<unsigned> counter{0};
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) return false;
    DirLock lock(dir_);
    if (!lock.ok()) return false;
    const Json entry{{"version", version_}, {"key", key}, {"checksum", hex(fnv1a(payload.dump()))}, {"payload", payload}};
    const fs::path target = entry_path(key);
    const fs::path tmp = target.string() + ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) return false;
        out << entry.dump();
        if (!out.flush()) {
            fs::remove(tmp, ec);
            return false;
        }
    }
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        return false;
    }
    return true;
}

}  // namespace sdecomp
