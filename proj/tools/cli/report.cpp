#include "report.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

namespace g2k::cli {

namespace fs = std::filesystem;

std::string sha256_hex(const std::string& bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 failed");
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return os.str();
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw InputError("cannot open " + p.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void atomic_write(const fs::path& p, const std::string& content) {
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    std::random_device rd;
    fs::path tmp = p;
    tmp += ".tmp" + std::to_string(rd());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << content;
        out.flush();
        if (!out) throw std::runtime_error("write failed for " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, p, ec);
    if (ec) {
        fs::remove(tmp);
        throw std::runtime_error("cannot move report into place: " + p.string() + ": " + ec.message());
    }
}

json parse_json(const std::string& text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // e.byte is 1-based and points just past the offending character.
        std::size_t byte = e.byte == 0 ? 0 : e.byte - 1;
        byte = std::min(byte, text.size());
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < byte; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::string what = e.what();
        auto pos = what.find("parse error");
        if (pos != std::string::npos) what = what.substr(pos);
        throw InputError(origin + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + what);
    }
}

fs::path resolve_fixture(const std::string& arg, const fs::path& data_dir) {
    fs::path p(arg);
    if (fs::is_regular_file(p)) return p;
    std::string tag = p.extension() == ".json" ? p.stem().string() : arg;
    fs::path byTag = data_dir / "fixtures" / (tag + ".json");
    if (fs::is_regular_file(byTag)) return byTag;
    throw InputError("fixture '" + arg + "' not found (looked for a file and for " + byTag.string() + ")");
}

LoadedFixture load_fixture(const std::string& arg, const fs::path& data_dir) {
    LoadedFixture f;
    f.given = arg;
    f.path = resolve_fixture(arg, data_dir);
    std::string text = read_file(f.path);
    f.sha256 = sha256_hex(text);
    json j = parse_json(text, f.path.string());
    try {
        f.fixture = fixture_from_json(j);
    } catch (const std::exception& e) {
        throw InputError(f.path.string() + ": invalid fixture: " + e.what());
    }
    return f;
}

Tolerances::Tolerances()
    : values_{{"harmonicity_ratio_min", 3.5}, {"harmonicity_ratio_max", 4.5}, {"decay_slope_max", -2.9},
              {"closedness_max", 1e-6},       {"fourier_factor_max", 1.05},   {"scalar_residual_max", 1e-12},
              {"l_variation_max", 0.10},      {"contraction_residual_max", 1e-12}} {}

void Tolerances::set(const std::string& assignment) {
    auto eq = assignment.find('=');
    if (eq == std::string::npos) throw InputError("tolerance '" + assignment + "' is not key=value");
    std::string key = assignment.substr(0, eq), val = assignment.substr(eq + 1);
    if (!values_.count(key)) {
        std::string known;
        for (const auto& [k, v] : values_) known += (known.empty() ? "" : ", ") + k;
        throw InputError("unknown tolerance '" + key + "' (known: " + known + ")");
    }
    std::size_t used = 0;
    double x = 0;
    try {
        x = std::stod(val, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != val.size()) throw InputError("tolerance '" + key + "' needs a number, got '" + val + "'");
    values_[key] = x;
}

double Tolerances::operator[](const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) throw std::logic_error("no tolerance " + key);
    return it->second;
}

json Tolerances::to_json() const {
    json j = json::object();
    for (const auto& [k, v] : values_) j[k] = v;
    return j;
}

std::vector<CatalogEntry> list_examples(const fs::path& dir) {
    std::vector<CatalogEntry> out;
    if (!fs::is_directory(dir)) return out;
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    std::map<std::string, std::string> seen;
    for (const auto& p : files) {
        std::string text = read_file(p);
        json j = parse_json(text, p.string());
        CatalogEntry c;
        c.tag = j.value("tag", p.stem().string());
        c.name = j.value("name", c.tag);
        c.description = j.value("description", std::string());
        c.file = p.filename().string();
        c.sha256 = sha256_hex(text);
        if (j.contains("expected")) c.expected = expectations_from_json(j["expected"]);
        auto [it, fresh] = seen.emplace(c.tag, c.file);
        if (!fresh) throw InputError("duplicate example tag '" + c.tag + "' in " + it->second + " and " + c.file);
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) { return a.tag < b.tag; });
    return out;
}

Report::Report(std::string command) {
    body_["command"] = std::move(command);
    body_["fixtures"] = json::array();
    body_["provenance"] = json::array();
    body_["checks"] = json::array();
    body_["expectations"] = json::array();
    body_["notes"] = json::array();
    body_["results"] = json::object();
}

void Report::add_fixture(const LoadedFixture& f) {
    body_["fixtures"].push_back({{"given", f.given}, {"file", f.path.filename().string()}, {"sha256", f.sha256}});
    if (!f.fixture.tag.empty()) provenance(f.fixture.tag);
}

void Report::add_input(const std::string& given, const fs::path& p) {
    body_["fixtures"].push_back({{"given", given}, {"file", p.filename().string()}, {"sha256", sha256_hex(read_file(p))}});
}

void Report::provenance(const std::string& note) { body_["provenance"].push_back(note); }

void Report::check(const std::string& name, const json& value, const json& tolerance, bool pass) {
    body_["checks"].push_back({{"name", name}, {"value", value}, {"tolerance", tolerance}, {"pass", pass}});
}

void Report::expect(const std::string& name, std::size_t expected, std::size_t actual) {
    body_["expectations"].push_back({{"name", name}, {"expected", expected}, {"actual", actual}, {"pass", expected == actual}});
}

void Report::note(const std::string& text) { body_["notes"].push_back(text); }

void Report::time(const std::string& phase, std::chrono::steady_clock::duration d) {
    timings_[phase] = std::chrono::duration<double, std::milli>(d).count();
}

bool Report::passed() const { return failures().empty(); }

std::vector<std::string> Report::failures() const {
    std::vector<std::string> out;
    for (const auto& c : body_["checks"])
        if (!c["pass"].get<bool>()) out.push_back("check " + c["name"].get<std::string>());
    for (const auto& e : body_["expectations"])
        if (!e["pass"].get<bool>())
            out.push_back("expectation " + e["name"].get<std::string>() + ": expected " + e["expected"].dump() + ", got " +
                          e["actual"].dump());
    return out;
}

json Report::finish() const {
    json out = body_;
    out["pass"] = passed();
    out["digest"] = sha256_hex(out.dump());
    out["timings_ms"] = timings_;
    return out;
}

}  // namespace g2k::cli
