#pragma once
// Minimal JSON writer with insertion-ordered objects and fixed float
// formatting (%.15g), so identical runs serialize byte-for-byte identically.

#include <cstdio>
#include <string>
#include <utility>
#include <vector>

namespace corona {

struct jnode {
    enum class kind { null, boolean, inum, num, str, array, object };
    kind k = kind::null;
    bool b = false;
    long long i = 0;
    double d = 0.0;
    std::string s;
    std::vector<jnode> items;
    std::vector<std::pair<std::string, jnode>> fields;

    static jnode object() {
        jnode n;
        n.k = kind::object;
        return n;
    }
    static jnode array() {
        jnode n;
        n.k = kind::array;
        return n;
    }
    static jnode str(std::string v) {
        jnode n;
        n.k = kind::str;
        n.s = std::move(v);
        return n;
    }
    static jnode num(double v) {
        jnode n;
        n.k = kind::num;
        n.d = v;
        return n;
    }
    static jnode inum(long long v) {
        jnode n;
        n.k = kind::inum;
        n.i = v;
        return n;
    }
    static jnode boolean(bool v) {
        jnode n;
        n.k = kind::boolean;
        n.b = v;
        return n;
    }

    jnode& set(const std::string& key, jnode v) {
        fields.emplace_back(key, std::move(v));
        return fields.back().second;
    }
    jnode& push(jnode v) {
        items.push_back(std::move(v));
        return items.back();
    }

    std::string dump(int indent = 2) const {
        std::string out;
        write(out, indent, 0);
        out += '\n';
        return out;
    }

private:
    static void write_escaped(std::string& out, const std::string& v) {
        out += '"';
        for (unsigned char ch : v) {
            switch (ch) {
                case '"': out += "\\\""; break;
                case '\\': out += "\\\\"; break;
                case '\n': out += "\\n"; break;
                case '\r': out += "\\r"; break;
                case '\t': out += "\\t"; break;
                default:
                    if (ch < 0x20) {
                        char buf[8];
                        std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                        out += buf;
                    } else {
                        out += (char)ch;
                    }
            }
        }
        out += '"';
    }

    void write(std::string& out, int indent, int depth) const {
        auto pad = [&](int levels) { out.append((size_t)(indent * levels), ' '); };
        switch (k) {
            case kind::null: out += "null"; break;
            case kind::boolean: out += b ? "true" : "false"; break;
            case kind::inum: out += std::to_string(i); break;
            case kind::num: {
                char buf[40];
                std::snprintf(buf, sizeof buf, "%.15g", d);
                out += buf;
                break;
            }
            case kind::str: write_escaped(out, s); break;
            case kind::array:
                if (items.empty()) {
                    out += "[]";
                    break;
                }
                out += "[\n";
                for (size_t j = 0; j < items.size(); j++) {
                    pad(depth + 1);
                    items[j].write(out, indent, depth + 1);
                    if (j + 1 < items.size()) out += ',';
                    out += '\n';
                }
                pad(depth);
                out += ']';
                break;
            case kind::object:
                if (fields.empty()) {
                    out += "{}";
                    break;
                }
                out += "{\n";
                for (size_t j = 0; j < fields.size(); j++) {
                    pad(depth + 1);
                    write_escaped(out, fields[j].first);
                    out += ": ";
                    fields[j].second.write(out, indent, depth + 1);
                    if (j + 1 < fields.size()) out += ',';
                    out += '\n';
                }
                pad(depth);
                out += '}';
                break;
        }
    }
};

} // namespace corona
