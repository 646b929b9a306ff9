#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace coolopt {

/// Deterministic RNG with an explicit Box-Muller normal transform.
/// std::normal_distribution is implementation-defined across standard
/// libraries; this keeps generated datasets reproducible from the seed alone.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    /// Uniform in [0, 1).
    double uniform();

    /// Standard normal, two uniforms per draw (no cached spare).
    double normal();

    double normal(double mean, double sigma) { return mean + sigma * normal(); }

    std::uint64_t next_u64();

private:
    std::uint64_t state_;
};

// ---- calendar helpers (proleptic Gregorian, UTC) ----

struct CivilDateTime {
    int year = 1970;
    int month = 1;   // 1..12
    int day = 1;     // 1..31
    int hour = 0;
    int minute = 0;
    int second = 0;
};

/// Days since 1970-01-01 for a civil date.
std::int64_t days_from_civil(int y, int m, int d);

CivilDateTime civil_from_epoch(std::int64_t epoch_seconds);

std::int64_t epoch_from_civil(const CivilDateTime& c);

/// "YYYY-MM-DDThh:mm:ss"
std::string format_iso8601(std::int64_t epoch_seconds);

/// Accepts "YYYY-MM-DD", "YYYY-MM-DDThh:mm:ss", optional trailing 'Z',
/// 'T' or space separator. Throws std::invalid_argument on malformed input.
std::int64_t parse_iso8601(const std::string& text);

// ---- small string/file helpers ----

std::vector<std::string> split(const std::string& line, char delim);

std::string trim(const std::string& s);

bool iequals(const std::string& a, const std::string& b);

/// Write via temp file + rename so readers never observe partial output.
void atomic_write_file(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

/// FNV-1a 64-bit content digest, hex-encoded; used in run manifests.
std::string fnv1a_hex(const std::string& content);

std::string fnv1a_file_hex(const std::string& path);

} // namespace coolopt
