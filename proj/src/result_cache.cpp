#include "rectsyz/result_cache.hpp"

#include <json.hpp>

#include <fstream>
#include <string>

namespace rectsyz {

namespace {

std::string cache_file_name(int a, int b, int m, int n) {
    return "betti-a" + std::to_string(a) + "-b" + std::to_string(b) + "-m" + std::to_string(m) +
           "-n" + std::to_string(n) + ".json";
}

}  // namespace

ResultCache::ResultCache(const std::filesystem::path& dir, int a, int b, int m, int n)
    : path_(dir / cache_file_name(a, b, m, n)), a_(a), b_(b), m_(m), n_(n) {
    std::ifstream in(path_);
    if (!in) return;
    nlohmann::json j;
    try {
        in >> j;
        for (const auto& [key, value] : j.at("betti").items()) {
            const auto comma = key.find(',');
            betti_[{std::stoi(key.substr(0, comma)), std::stoi(key.substr(comma + 1))}] =
                value.get<long long>();
        }
        for (const auto& [key, value] : j.at("hilbert").items())
            hilbert_[std::stoi(key)] = value.get<long long>();
    } catch (...) {
        // a damaged cache is ignored, never trusted
        betti_.clear();
        hilbert_.clear();
    }
}

std::optional<long long> ResultCache::betti(int i, int j) const {
    auto it = betti_.find({i, j});
    if (it == betti_.end()) return std::nullopt;
    return it->second;
}

std::optional<long long> ResultCache::hilbert(int d) const {
    auto it = hilbert_.find(d);
    if (it == hilbert_.end()) return std::nullopt;
    return it->second;
}

void ResultCache::store_betti(int i, int j, long long value) { betti_[{i, j}] = value; }

void ResultCache::store_hilbert(int d, long long value) { hilbert_[d] = value; }

bool ResultCache::save() const {
    nlohmann::json j;
    j["a"] = a_;
    j["b"] = b_;
    j["m"] = m_;
    j["n"] = n_;
    nlohmann::json betti = nlohmann::json::object();
    for (const auto& [key, value] : betti_)
        betti[std::to_string(key.first) + "," + std::to_string(key.second)] = value;
    nlohmann::json hilbert = nlohmann::json::object();
    for (const auto& [key, value] : hilbert_) hilbert[std::to_string(key)] = value;
    j["betti"] = betti;
    j["hilbert"] = hilbert;

    // the cache is advisory: failure to persist must not fail the run
    std::error_code ec;
    std::filesystem::create_directories(path_.parent_path(), ec);
    std::ofstream out(path_, std::ios::trunc);
    if (!out) return false;
    out << j.dump(2) << '\n';
    return out.good();
}

}  // namespace rectsyz
