#ifndef RECTSYZ_RESULT_CACHE_HPP
#define RECTSYZ_RESULT_CACHE_HPP

#include <filesystem>
#include <map>
#include <optional>
#include <utility>

namespace rectsyz {

/// Advisory on-disk cache of oracle results for one (a, b, m, n): Hilbert
/// function values and the Betti entries computed so far, keyed by (i, j).
/// One JSON file per parameter tuple; serialization is deterministic so that
/// cache hits rewrite byte-identical files.
class ResultCache {
public:
    ResultCache(const std::filesystem::path& dir, int a, int b, int m, int n);

    std::optional<long long> betti(int i, int j) const;
    std::optional<long long> hilbert(int d) const;
    void store_betti(int i, int j, long long value);
    void store_hilbert(int d, long long value);

    /// Writes the cache file (creating the directory if needed). Returns
    /// false when the file cannot be written; the cache is advisory, so
    /// callers may warn but must not fail.
    bool save() const;
    std::filesystem::path file_path() const { return path_; }

private:
    std::filesystem::path path_;
    int a_, b_, m_, n_;
    std::map<std::pair<int, int>, long long> betti_;
    std::map<int, long long> hilbert_;
};

}  // namespace rectsyz

#endif
