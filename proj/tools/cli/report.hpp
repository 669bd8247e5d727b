#pragma once

#include "g2k/serialization.hpp"

#include <chrono>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace g2k::cli {

/// Bad input: unreadable or malformed files, unknown options. Exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string sha256_hex(const std::string& bytes);
std::string read_file(const std::filesystem::path& p);
/// Writes to a sibling temporary file and renames it into place.
void atomic_write(const std::filesystem::path& p, const std::string& content);

/// Parses JSON text; errors carry "<origin>:<line>:<column>".
json parse_json(const std::string& text, const std::string& origin);

struct LoadedFixture {
    std::string given;  // as typed on the command line
    std::filesystem::path path;
    std::string sha256;
    Fixture fixture;
};

/// A path, or a tag resolved as <data_dir>/fixtures/<tag>.json (also tried for the stem of a missing path).
std::filesystem::path resolve_fixture(const std::string& arg, const std::filesystem::path& data_dir);
LoadedFixture load_fixture(const std::string& arg, const std::filesystem::path& data_dir);

class Tolerances {
public:
    Tolerances();
    /// "key=value"; unknown keys and unparsable values throw InputError.
    void set(const std::string& assignment);
    double operator[](const std::string& key) const;
    json to_json() const;

private:
    std::map<std::string, double> values_;
};

struct CatalogEntry {
    std::string tag, name, description, file, sha256;
    Expectations expected;
};
/// Sorted by tag; duplicate tags throw InputError.
std::vector<CatalogEntry> list_examples(const std::filesystem::path& fixtures_dir);

class Report {
public:
    explicit Report(std::string command);

    json& results() { return body_["results"]; }
    void echo(const json& arguments) { body_["arguments"] = arguments; }
    void add_fixture(const LoadedFixture& f);
    void add_input(const std::string& given, const std::filesystem::path& p);
    void provenance(const std::string& note);
    void tolerances(const Tolerances& t) { body_["tolerances"] = t.to_json(); }

    /// Numeric result with its tolerance and pass flag.
    void check(const std::string& name, const json& value, const json& tolerance, bool pass);
    /// Exact expectation taken from a fixture.
    void expect(const std::string& name, std::size_t expected, std::size_t actual);
    void note(const std::string& text);

    void time(const std::string& phase, std::chrono::steady_clock::duration d);

    bool passed() const;
    std::vector<std::string> failures() const;
    /// Body plus "digest" (SHA-256 of the body) plus "timings_ms"; timings stay out of the digest.
    json finish() const;

private:
    json body_;
    json timings_ = json::object();
};

}  // namespace g2k::cli
