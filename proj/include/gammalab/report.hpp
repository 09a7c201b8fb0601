#pragma once

// Report documents: JSON with fixed key order and floats printed at 17
// significant digits (lossless double round-trip), so identical inputs and
// seed produce byte-identical payloads. CSV export shares the same float
// formatting.

#include <complex>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gammalab/complex_sample.hpp"
#include "gammalab/errors.hpp"

namespace gammalab {

using ojson = nlohmann::ordered_json;

/// 17-significant-digit decimal form; round-trips any finite double.
inline std::string float17(double v) {
    if (!std::isfinite(v)) return v > 0 ? "inf" : (v < 0 ? "-inf" : "nan");
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace detail {

inline void dump_json_rec(const ojson& j, std::string& out, int indent, int depth) {
    const std::string pad(static_cast<std::size_t>(indent) * depth, ' ');
    const std::string pad_in(static_cast<std::size_t>(indent) * (depth + 1), ' ');
    switch (j.type()) {
        case ojson::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ",\n";
                first = false;
                out += pad_in + ojson(it.key()).dump() + ": ";
                dump_json_rec(it.value(), out, indent, depth + 1);
            }
            out += "\n" + pad + "}";
            return;
        }
        case ojson::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += "[\n";
            bool first = true;
            for (const auto& v : j) {
                if (!first) out += ",\n";
                first = false;
                out += pad_in;
                dump_json_rec(v, out, indent, depth + 1);
            }
            out += "\n" + pad + "]";
            return;
        }
        case ojson::value_t::number_float: {
            const double v = j.get<double>();
            out += std::isfinite(v) ? float17(v) : "null";
            return;
        }
        default:
            out += j.dump();
            return;
    }
}

}  // namespace detail

/// Deterministic serialization: insertion key order, floats at 17 digits,
/// non-finite floats as null.
inline std::string dump_json(const ojson& j, int indent = 2) {
    std::string out;
    detail::dump_json_rec(j, out, indent, 0);
    out += "\n";
    return out;
}

inline ojson complex_json(std::complex<double> z) {
    return ojson::array({z.real(), z.imag()});
}

inline ojson sample_json(const ComplexSample& s) {
    ojson j;
    j["re"] = s.re;
    j["im"] = s.im;
    j["log_abs"] = s.log_abs;
    j["arg_cont"] = s.arg_cont;
    return j;
}

/// One CSV row from double cells, 17-digit formatting.
inline std::string csv_row(const std::vector<double>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out += ",";
        out += float17(cells[i]);
    }
    out += "\n";
    return out;
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw io_error("cannot open for writing: " + path);
    f << content;
    if (!f) throw io_error("write failed: " + path);
}

}  // namespace gammalab
