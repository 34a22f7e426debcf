// Copyright 2026 The qw2d Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace qw2d {

/// Fixed numeric formatting for all file output: 17 significant digits,
/// lowercase `e` exponent. Two runs with identical inputs must produce
/// byte-identical files, so every double that reaches a file goes through
/// this one function.
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16e", v);
    return buf;
}

inline std::string json_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

/// Minimal JSON document with insertion-ordered objects and deterministic
/// serialization (doubles through format_double). Output-only; there is no
/// parser here on purpose.
class JsonValue {
public:
    using Array = std::vector<JsonValue>;
    using Member = std::pair<std::string, JsonValue>;
    using Object = std::vector<Member>;

    JsonValue() : data_(nullptr) {}
    JsonValue(std::nullptr_t) : data_(nullptr) {}
    JsonValue(bool b) : data_(b) {}
    JsonValue(int v) : data_(static_cast<std::int64_t>(v)) {}
    JsonValue(long v) : data_(static_cast<std::int64_t>(v)) {}
    JsonValue(long long v) : data_(static_cast<std::int64_t>(v)) {}
    JsonValue(unsigned v) : data_(static_cast<std::int64_t>(v)) {}
    JsonValue(unsigned long v) : data_(static_cast<std::int64_t>(v)) {}
    JsonValue(unsigned long long v) : data_(static_cast<std::int64_t>(v)) {}
    JsonValue(double v) : data_(v) {}
    JsonValue(const char* s) : data_(std::string(s)) {}
    JsonValue(std::string s) : data_(std::move(s)) {}
    JsonValue(Array a) : data_(std::move(a)) {}
    JsonValue(Object o) : data_(std::move(o)) {}

    static JsonValue object() { return JsonValue(Object{}); }
    static JsonValue array() { return JsonValue(Array{}); }

    JsonValue& add(std::string key, JsonValue v) {
        std::get<Object>(data_).emplace_back(std::move(key), std::move(v));
        return *this;
    }
    JsonValue& push(JsonValue v) {
        std::get<Array>(data_).push_back(std::move(v));
        return *this;
    }

    bool is_object() const { return std::holds_alternative<Object>(data_); }
    bool is_array() const { return std::holds_alternative<Array>(data_); }

    void dump(std::string& out) const {
        struct Printer {
            std::string& out;
            void operator()(std::nullptr_t) const { out += "null"; }
            void operator()(bool b) const { out += b ? "true" : "false"; }
            void operator()(std::int64_t v) const { out += std::to_string(v); }
            void operator()(double v) const { out += format_double(v); }
            void operator()(const std::string& s) const {
                out += '"';
                out += json_escape(s);
                out += '"';
            }
            void operator()(const Array& a) const {
                out += '[';
                for (std::size_t i = 0; i < a.size(); ++i) {
                    if (i) out += ',';
                    a[i].dump(out);
                }
                out += ']';
            }
            void operator()(const Object& o) const {
                out += '{';
                for (std::size_t i = 0; i < o.size(); ++i) {
                    if (i) out += ',';
                    out += '"';
                    out += json_escape(o[i].first);
                    out += "\":";
                    o[i].second.dump(out);
                }
                out += '}';
            }
        };
        std::visit(Printer{out}, data_);
    }

    std::string dump() const {
        std::string out;
        dump(out);
        return out;
    }

private:
    std::variant<std::nullptr_t, bool, std::int64_t, double, std::string, Array, Object> data_;
};

}  // namespace qw2d
