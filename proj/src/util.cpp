#include "util.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace coolopt {

std::uint64_t Rng::next_u64() {
    // splitmix64
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double Rng::uniform() {
    return static_cast<double>(next_u64() >> 11) * (1.0 / 9007199254740992.0);
}

double Rng::normal() {
    double u1 = uniform();
    double u2 = uniform();
    while (u1 <= 1e-300) u1 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

std::int64_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

CivilDateTime civil_from_epoch(std::int64_t t) {
    std::int64_t z = t / 86400;
    std::int64_t sod = t % 86400;
    if (sod < 0) { sod += 86400; z -= 1; }
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    const unsigned d = doy - (153 * mp + 2) / 5 + 1;
    const unsigned m = mp + (mp < 10 ? 3 : -9);
    CivilDateTime c;
    c.year = static_cast<int>(y + (m <= 2));
    c.month = static_cast<int>(m);
    c.day = static_cast<int>(d);
    c.hour = static_cast<int>(sod / 3600);
    c.minute = static_cast<int>((sod % 3600) / 60);
    c.second = static_cast<int>(sod % 60);
    return c;
}

std::int64_t epoch_from_civil(const CivilDateTime& c) {
    return days_from_civil(c.year, c.month, c.day) * 86400
         + c.hour * 3600 + c.minute * 60 + c.second;
}

std::string format_iso8601(std::int64_t t) {
    CivilDateTime c = civil_from_epoch(t);
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02d",
                  c.year, c.month, c.day, c.hour, c.minute, c.second);
    return buf;
}

std::int64_t parse_iso8601(const std::string& text) {
    std::string s = trim(text);
    if (!s.empty() && (s.back() == 'Z' || s.back() == 'z')) s.pop_back();
    CivilDateTime c;
    int n = 0;
    if (std::sscanf(s.c_str(), "%d-%d-%d%*1[T ]%d:%d:%d%n",
                    &c.year, &c.month, &c.day, &c.hour, &c.minute, &c.second, &n) == 6
        && n == static_cast<int>(s.size())) {
        // full datetime
    } else if (std::sscanf(s.c_str(), "%d-%d-%d%*1[T ]%d:%d%n",
                           &c.year, &c.month, &c.day, &c.hour, &c.minute, &n) == 5
               && n == static_cast<int>(s.size())) {
        c.second = 0;
    } else if (std::sscanf(s.c_str(), "%d-%d-%d%n", &c.year, &c.month, &c.day, &n) == 3
               && n == static_cast<int>(s.size())) {
        c.hour = c.minute = c.second = 0;
    } else {
        throw std::invalid_argument("unparseable ISO-8601 timestamp: '" + text + "'");
    }
    if (c.month < 1 || c.month > 12 || c.day < 1 || c.day > 31
        || c.hour > 23 || c.minute > 59 || c.second > 60) {
        throw std::invalid_argument("out-of-range timestamp field: '" + text + "'");
    }
    return epoch_from_civil(c);
}

std::vector<std::string> split(const std::string& line, char delim) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == delim) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

bool iequals(const std::string& a, const std::string& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
        if (std::tolower(static_cast<unsigned char>(a[i]))
            != std::tolower(static_cast<unsigned char>(b[i]))) return false;
    }
    return true;
}

void atomic_write_file(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open for writing: " + tmp);
        f.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!f) throw std::runtime_error("write failed: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        throw std::runtime_error("rename failed: " + tmp + " -> " + path);
    }
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string fnv1a_hex(const std::string& content) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : content) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string fnv1a_file_hex(const std::string& path) {
    return fnv1a_hex(read_file(path));
}

} // namespace coolopt
