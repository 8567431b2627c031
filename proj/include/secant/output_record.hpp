#pragma once

#include <cstdio>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace secant {

// All floating-point output is serialized with 10 significant digits.
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

// Round to the value that 10-significant-digit serialization represents, so
// that serialize(parse(serialize(x))) == serialize(x).
inline double round10(double v) {
    return std::strtod(format_double(v).c_str(), nullptr);
}

struct OutputRecord {
    double m = 0.0;
    double c = 1.0;
    std::string potential;  // oscillator | linear | power
    double beta = 0.0;
    std::optional<double> gamma;
    double E_lower = 0.0;
    std::optional<double> E_reference;
    double k_cross = 0.0;
    bool cert_nodeless = false;
    bool cert_monotone = false;
    bool cert_W_nonneg = false;

    void round_floats() {
        m = round10(m);
        c = round10(c);
        beta = round10(beta);
        if (gamma) gamma = round10(*gamma);
        E_lower = round10(E_lower);
        if (E_reference) E_reference = round10(*E_reference);
        k_cross = round10(k_cross);
    }

    bool operator==(const OutputRecord&) const = default;
};

namespace detail {

inline std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

inline std::vector<std::string> csv_split(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (quoted) {
            if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (ch == '"') {
                quoted = false;
            } else {
                cur += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    fields.push_back(cur);
    return fields;
}

inline std::string opt_str(const std::optional<double>& v) {
    return v ? format_double(*v) : std::string();
}

inline std::optional<double> parse_opt(const std::string& s) {
    if (s.empty()) return std::nullopt;
    return std::strtod(s.c_str(), nullptr);
}

inline bool parse_bool(const std::string& s) {
    if (s == "true") return true;
    if (s == "false") return false;
    throw std::invalid_argument("OutputRecord: bad boolean field '" + s + "'");
}

}  // namespace detail

inline std::string csv_header() {
    return "m,c,potential,beta,gamma,E_lower,E_reference,k_cross,"
           "cert_nodeless,cert_monotone,cert_W_nonneg";
}

inline std::string to_csv_row(const OutputRecord& r) {
    std::ostringstream os;
    os << format_double(r.m) << ',' << format_double(r.c) << ','
       << detail::csv_quote(r.potential) << ',' << format_double(r.beta) << ','
       << detail::opt_str(r.gamma) << ',' << format_double(r.E_lower) << ','
       << detail::opt_str(r.E_reference) << ',' << format_double(r.k_cross) << ','
       << (r.cert_nodeless ? "true" : "false") << ','
       << (r.cert_monotone ? "true" : "false") << ','
       << (r.cert_W_nonneg ? "true" : "false");
    return os.str();
}

inline OutputRecord record_from_csv_row(const std::string& line) {
    const auto f = detail::csv_split(line);
    if (f.size() != 11)
        throw std::invalid_argument("OutputRecord: expected 11 CSV fields, got " +
                                    std::to_string(f.size()));
    OutputRecord r;
    r.m = std::strtod(f[0].c_str(), nullptr);
    r.c = std::strtod(f[1].c_str(), nullptr);
    r.potential = f[2];
    r.beta = std::strtod(f[3].c_str(), nullptr);
    r.gamma = detail::parse_opt(f[4]);
    r.E_lower = std::strtod(f[5].c_str(), nullptr);
    r.E_reference = detail::parse_opt(f[6]);
    r.k_cross = std::strtod(f[7].c_str(), nullptr);
    r.cert_nodeless = detail::parse_bool(f[8]);
    r.cert_monotone = detail::parse_bool(f[9]);
    r.cert_W_nonneg = detail::parse_bool(f[10]);
    return r;
}

}  // namespace secant
