#pragma once

// Minimal RFC 4180 CSV reader/writer. Quoted fields may contain commas,
// escaped quotes ("") and line breaks; records are returned one at a time.

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "coursenet/errors.hpp"

namespace coursenet::csv {

// Reads the next record. Returns nullopt at end of input. `row` is the
// 1-based record number, used only for error messages.
inline std::optional<std::vector<std::string>> read_record(std::istream& in, int row) {
    int ch = in.get();
    if (ch == std::istream::traits_type::eof()) return std::nullopt;

    std::vector<std::string> fields;
    std::string field;
    bool in_quotes = false;
    bool field_was_quoted = false;

    auto end_field = [&] {
        fields.push_back(field);
        field.clear();
        field_was_quoted = false;
    };

    while (true) {
        const char c = static_cast<char>(ch);
        if (in_quotes) {
            if (c == '"') {
                const int next = in.peek();
                if (next == '"') {
                    in.get();
                    field.push_back('"');
                } else {
                    in_quotes = false;
                }
            } else {
                field.push_back(c);
            }
        } else if (c == '"') {
            if (!field.empty() || field_was_quoted) {
                throw InputError("row " + std::to_string(row) +
                                 ": stray quote inside unquoted field");
            }
            in_quotes = true;
            field_was_quoted = true;
        } else if (c == ',') {
            end_field();
        } else if (c == '\n') {
            break;
        } else if (c == '\r') {
            if (in.peek() == '\n') in.get();
            break;
        } else {
            field.push_back(c);
        }

        ch = in.get();
        if (ch == std::istream::traits_type::eof()) {
            if (in_quotes) {
                throw InputError("row " + std::to_string(row) +
                                 ": unterminated quoted field");
            }
            break;
        }
    }
    end_field();
    return fields;
}

inline std::string escape_field(const std::string& field) {
    const bool needs_quotes =
        field.find_first_of(",\"\r\n") != std::string::npos;
    if (!needs_quotes) return field;
    std::string out = "\"";
    for (const char c : field) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += "\"";
    return out;
}

inline void write_record(std::ostream& out, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) out << ',';
        out << escape_field(fields[i]);
    }
    out << '\n';
}

}  // namespace coursenet::csv
