#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "rectsyz/exact_linalg.hpp"
#include "rectsyz/result_cache.hpp"
#include "rectsyz/serialize.hpp"

using namespace rectsyz;

TEST_CASE("partition json round trip") {
    const Partition p{9, 7, 6, 5, 3, 2};
    CHECK(to_json(p).dump() == "[9,7,6,5,3,2]");
    CHECK(to_json(Partition{}).dump() == "[]");
    CHECK(partition_from_json(to_json(p)) == p);
}

TEST_CASE("equivariant polynomial json schema and round trip") {
    EquivariantPolynomial p;
    p.add_term({Partition{3}, Partition{2, 1}}, 3, 1, 2);
    p.add_term({Partition{2}, Partition{2}}, 2, 0, 1);
    const nlohmann::json j = to_json(p);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 2);
    CHECK(j[0]["row"].dump() == "[2]");
    CHECK(j[0]["col"].dump() == "[2]");
    CHECK(j[0]["z"] == 2);
    CHECK(j[0]["w"] == 0);
    CHECK(j[0]["mult"] == 1);
    CHECK(equivariant_from_json(j) == p);
}

TEST_CASE("betti table json schema and round trip") {
    BettiTable t;
    t.set(0, 2, 9);
    t.set(1, 3, 16);
    const nlohmann::json j = to_json(t);
    REQUIRE(j.is_array());
    CHECK(j[0]["i"] == 0);
    CHECK(j[0]["j"] == 2);
    CHECK(j[0]["value"] == 9);
    CHECK(betti_table_from_json(j) == t);
}

TEST_CASE("result cache persists and rewrites byte-identically") {
    const std::filesystem::path dir =
        std::filesystem::temp_directory_path() / "rectsyz-cache-test";
    std::filesystem::remove_all(dir);

    ResultCache cache(dir, 1, 2, 2, 2);
    CHECK_FALSE(cache.betti(0, 2).has_value());
    cache.store_betti(0, 2, 9);
    cache.store_betti(1, 3, 16);
    cache.store_hilbert(2, 9);
    cache.save();

    auto slurp = [](const std::filesystem::path& p) {
        std::ifstream in(p);
        std::ostringstream os;
        os << in.rdbuf();
        return os.str();
    };
    const std::string first = slurp(cache.file_path());
    CHECK_FALSE(first.empty());

    ResultCache reloaded(dir, 1, 2, 2, 2);
    CHECK(reloaded.betti(0, 2) == 9);
    CHECK(reloaded.betti(1, 3) == 16);
    CHECK(reloaded.hilbert(2) == 9);
    CHECK_FALSE(reloaded.betti(2, 4).has_value());
    reloaded.save();
    CHECK(slurp(reloaded.file_path()) == first);

    // different parameters use a different file
    ResultCache other(dir, 1, 1, 2, 2);
    CHECK(other.file_path() != cache.file_path());
    CHECK_FALSE(other.betti(0, 2).has_value());

    std::filesystem::remove_all(dir);
}

TEST_CASE("exact rank fast path agrees with the big-integer path") {
    const std::vector<std::vector<long long>> m{{2, 4, 6}, {1, 2, 3}, {0, 1, 1}};
    CHECK(exact_rank(m) == 2);

    std::vector<std::vector<BigInt>> big(3);
    for (int r = 0; r < 3; ++r) big[r].assign(m[r].begin(), m[r].end());
    CHECK(exact_rank_big(big) == 2);

    CHECK(exact_rank({{0, 0}, {0, 0}}) == 0);
    CHECK(exact_rank({}) == 0);

    // forces intermediate values far past 64 bits, exercising the fallback
    const long long big_entry = 1LL << 40;
    CHECK(exact_rank({{big_entry, 0, 0},
                      {big_entry, big_entry, big_entry + 1},
                      {0, big_entry, big_entry}}) == 3);
}

TEST_CASE("integer rref canonical form") {
    std::vector<std::vector<BigInt>> rows{{2, 4, 0}, {1, 2, 1}, {3, 6, 1}};
    const auto rref = integer_rref(rows);
    REQUIRE(rref.size() == 2);
    CHECK(rref[0] == std::vector<BigInt>{1, 2, 0});
    CHECK(rref[1] == std::vector<BigInt>{0, 0, 1});

    CHECK(in_row_span(rref, {1, 2, 5}));
    CHECK_FALSE(in_row_span(rref, {0, 1, 0}));
}
