#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bgl/prime_cache.hpp"
#include "bgl/record.hpp"

using namespace bgl;

namespace {

ExperimentRecord sample_record(int key) {
  ExperimentRecord r;
  r.experiment_id = "t/" + std::to_string(key);
  r.subcommand = "test";
  r.params = {{"x", "1"}};
  r.outputs = {{"p", std::to_string(key)}, {"value", "v" + std::to_string(key)}};
  return r;
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("bgl_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("format_double is shortest round-trip") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(1.0 / 3.0) == "0.3333333333333333");
  CHECK(format_double(-0.0) == "-0");
  CHECK(format_double(1e100) == "1e+100");
}

TEST_CASE("write_csv emits sorted headers and quotes per RFC 4180") {
  ExperimentRecord r;
  r.outputs = {{"b", "plain"}, {"a", "has,comma"}, {"c", "has\"quote"}};
  std::ostringstream os;
  write_csv(os, std::span<const ExperimentRecord>(&r, 1));
  CHECK(os.str() == "a,b,c\n\"has,comma\",plain,\"has\"\"quote\"\n");
}

TEST_CASE("write_csv empty and single records") {
  std::ostringstream empty;
  write_csv(empty, {});
  CHECK(empty.str() == "\n");  // header only

  auto r = sample_record(3);
  std::ostringstream one;
  write_csv(one, std::span<const ExperimentRecord>(&r, 1));
  CHECK(one.str() == "p,value\n3,v3\n");
}

TEST_CASE("write_csv rejects heterogeneous records") {
  std::vector<ExperimentRecord> recs{sample_record(1), sample_record(2)};
  recs[1].outputs["extra"] = "x";
  std::ostringstream os;
  CHECK_THROWS_AS(write_csv(os, recs), InternalError);

  std::vector<ExperimentRecord> renamed{sample_record(1), sample_record(2)};
  renamed[1].outputs.erase("value");
  renamed[1].outputs["welue"] = "v2";
  std::ostringstream os2;
  CHECK_THROWS_AS(write_csv(os2, renamed), InternalError);
}

TEST_CASE("write_json_lines carries the full record") {
  auto r = sample_record(5);
  r.runtime_ms = 42;
  std::ostringstream os;
  write_json_lines(os, std::span<const ExperimentRecord>(&r, 1));
  const std::string line = os.str();
  CHECK(line.find("\"runtime_ms\":42") != std::string::npos);
  CHECK(line.find("\"artifact_version\":\"") != std::string::npos);
  CHECK(line.find("\"subcommand\":\"test\"") != std::string::npos);
  CHECK(line.back() == '\n');
}

TEST_CASE("manifest_json shape") {
  auto m = manifest_json("beatty", {{"alpha", "sqrt2"}, {"prime", "7"}}, 1);
  CHECK(m.find("\"subcommand\": \"beatty\"") != std::string::npos);
  CHECK(m.find("\"alpha\": \"sqrt2\"") != std::string::npos);
  CHECK(m.find("\"records\": 1") != std::string::npos);
}

TEST_CASE("prime cache: fresh build, bits match the sieve") {
  TempDir tmp;
  const auto file = tmp.path / "primes.bin";
  bool regenerated = false;
  auto cache = load_or_build_prime_cache(file, 100, &regenerated);
  CHECK(regenerated);
  CHECK(cache.limit == 100);
  for (std::uint64_t n = 0; n <= 100; ++n) {
    bool expect = false;
    for (std::uint64_t q : sieve_primes(100))
      if (q == n) expect = true;
    CHECK(cache.is_prime(n) == expect);
  }
  CHECK(cache.primes_upto(100) == sieve_primes(100));
}

TEST_CASE("prime cache: reload does not regenerate and is identical") {
  TempDir tmp;
  const auto file = tmp.path / "primes.bin";
  bool regenerated = false;
  auto first = load_or_build_prime_cache(file, 10'000, &regenerated);
  CHECK(regenerated);
  auto second = load_or_build_prime_cache(file, 10'000, &regenerated);
  CHECK(!regenerated);
  CHECK(first.odd_bits == second.odd_bits);
  // a smaller request is served from the same file
  auto third = load_or_build_prime_cache(file, 100, &regenerated);
  CHECK(!regenerated);
  CHECK(third.primes_upto(100) == sieve_primes(100));
}

TEST_CASE("prime cache: truncated and corrupt files regenerate") {
  TempDir tmp;
  const auto file = tmp.path / "primes.bin";
  bool regenerated = false;
  load_or_build_prime_cache(file, 1000, &regenerated);

  SUBCASE("truncated payload") {
    std::filesystem::resize_file(file, std::filesystem::file_size(file) - 7);
    auto cache = load_or_build_prime_cache(file, 1000, &regenerated);
    CHECK(regenerated);
    CHECK(cache.primes_upto(1000) == sieve_primes(1000));
  }
  SUBCASE("bad magic") {
    std::fstream f(file, std::ios::binary | std::ios::in | std::ios::out);
    f.write("WRONGMAG", 8);
    f.close();
    auto cache = load_or_build_prime_cache(file, 1000, &regenerated);
    CHECK(regenerated);
    CHECK(cache.primes_upto(1000) == sieve_primes(1000));
  }
  SUBCASE("insufficient limit regenerates at the larger request") {
    auto cache = load_or_build_prime_cache(file, 5000, &regenerated);
    CHECK(regenerated);
    CHECK(cache.limit == 5000);
  }
}

TEST_CASE("prime cache: unwritable path raises a resource error") {
  CHECK_THROWS_AS(
      load_or_build_prime_cache("/nonexistent_dir_zz/cache.bin", 100),
      ResourceError);
}
