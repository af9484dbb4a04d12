#ifndef SEXTIC_RECORD_HPP
#define SEXTIC_RECORD_HPP

#include <optional>
#include <string>
#include <vector>

#include "sextic/classify.hpp"

namespace sextic {

/// One classification result in wire form. Big integers travel as decimal
/// strings; disc_f overflows 64 bits even for modest A, B.
struct OutputRecord {
    long long k = 0, A = 0, B = 0;
    bool irreducible = false;
    std::optional<std::string> galois_familiar;
    std::optional<std::string> galois_t;
    std::optional<bool> monogenic;
    std::string delta, disc_f, disc_g;
    std::string method;
    std::vector<std::string> notes;

    /// Single-line JSON object, fields in schema order, absent optionals omitted.
    std::string to_json_line() const;

    static std::string csv_header(); // k,A,B,irreducible,galois_familiar,...
    std::string to_csv_row() const;
};

OutputRecord make_record(const Classification& c, const std::string& method);

} // namespace sextic

#endif
