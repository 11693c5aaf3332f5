#include "jtgen/toolchain/coverage_xml.hpp"

#include <map>

#include "jtgen/support/strings.hpp"

namespace jtgen::toolchain {

namespace {

std::string decode_entities(std::string s) {
    s = strings::replace_all(std::move(s), "&lt;", "<");
    s = strings::replace_all(std::move(s), "&gt;", ">");
    s = strings::replace_all(std::move(s), "&quot;", "\"");
    s = strings::replace_all(std::move(s), "&apos;", "'");
    s = strings::replace_all(std::move(s), "&amp;", "&");
    return s;
}

struct XmlTag {
    std::string name;
    std::map<std::string, std::string> attrs;
    bool closing = false;      // </name>
    bool self_closing = false; // <name/>
};

// Minimal scanner for machine-generated XML: elements, attributes, and
// self-closing tags. Prologs, doctypes, and comments are skipped.
class XmlScanner {
public:
    explicit XmlScanner(const std::string& text) : text_(text) {}

    bool next(XmlTag& out) {
        for (;;) {
            std::size_t open = text_.find('<', pos_);
            if (open == std::string::npos) return false;
            if (text_.compare(open, 4, "<!--") == 0) {
                std::size_t end = text_.find("-->", open);
                pos_ = end == std::string::npos ? text_.size() : end + 3;
                continue;
            }
            if (open + 1 < text_.size() && (text_[open + 1] == '?' || text_[open + 1] == '!')) {
                std::size_t end = text_.find('>', open);
                pos_ = end == std::string::npos ? text_.size() : end + 1;
                continue;
            }
            std::size_t close = text_.find('>', open);
            if (close == std::string::npos) {
                throw MalformedReport("unterminated tag in coverage report");
            }
            pos_ = close + 1;
            parse_tag(text_.substr(open + 1, close - open - 1), out);
            return true;
        }
    }

private:
    void parse_tag(std::string body, XmlTag& out) {
        out = XmlTag{};
        if (!body.empty() && body.front() == '/') {
            out.closing = true;
            out.name = strings::trim(body.substr(1));
            return;
        }
        if (!body.empty() && body.back() == '/') {
            out.self_closing = true;
            body.pop_back();
        }
        std::size_t i = 0;
        while (i < body.size() && !std::isspace(static_cast<unsigned char>(body[i]))) ++i;
        out.name = body.substr(0, i);
        while (i < body.size()) {
            while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i;
            std::size_t eq = body.find('=', i);
            if (eq == std::string::npos) break;
            std::string key = strings::trim(body.substr(i, eq - i));
            std::size_t q1 = body.find('"', eq);
            if (q1 == std::string::npos) break;
            std::size_t q2 = body.find('"', q1 + 1);
            if (q2 == std::string::npos) throw MalformedReport("unterminated attribute value");
            out.attrs[key] = decode_entities(body.substr(q1 + 1, q2 - q1 - 1));
            i = q2 + 1;
        }
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

std::string simple_name(const std::string& jvm_class) {
    std::string s = jvm_class;
    if (auto slash = s.rfind('/'); slash != std::string::npos) s = s.substr(slash + 1);
    if (auto dollar = s.rfind('$'); dollar != std::string::npos) s = s.substr(dollar + 1);
    return s;
}

// com/fixture/Outer$Inner -> com.fixture.Outer.Inner
std::string dotted_class_name(const std::string& jvm_class) {
    std::string s = jvm_class;
    for (auto& c : s) {
        if (c == '/' || c == '$') c = '.';
    }
    return s;
}

}  // namespace

std::string descriptor_to_param_list(const std::string& descriptor) {
    std::size_t open = descriptor.find('(');
    std::size_t close = descriptor.find(')');
    if (open == std::string::npos || close == std::string::npos || close < open) {
        throw MalformedReport("bad method descriptor: " + descriptor);
    }
    std::string params = descriptor.substr(open + 1, close - open - 1);
    std::vector<std::string> types;
    std::size_t i = 0;
    while (i < params.size()) {
        int array_depth = 0;
        while (i < params.size() && params[i] == '[') {
            ++array_depth;
            ++i;
        }
        if (i >= params.size()) throw MalformedReport("truncated descriptor: " + descriptor);
        std::string base;
        switch (params[i]) {
            case 'B': base = "byte"; ++i; break;
            case 'C': base = "char"; ++i; break;
            case 'D': base = "double"; ++i; break;
            case 'F': base = "float"; ++i; break;
            case 'I': base = "int"; ++i; break;
            case 'J': base = "long"; ++i; break;
            case 'S': base = "short"; ++i; break;
            case 'Z': base = "boolean"; ++i; break;
            case 'L': {
                std::size_t semi = params.find(';', i);
                if (semi == std::string::npos)
                    throw MalformedReport("unterminated object type: " + descriptor);
                base = simple_name(params.substr(i + 1, semi - i - 1));
                i = semi + 1;
                break;
            }
            default:
                throw MalformedReport("unknown descriptor element '" +
                                      std::string(1, params[i]) + "' in " + descriptor);
        }
        for (int d = 0; d < array_depth; ++d) base += "[]";
        types.push_back(base);
    }
    return strings::join(types, ", ");
}

CoverageReport parse_coverage_xml(const std::string& xml,
                                  const std::vector<std::string>& focal_signatures) {
    CoverageReport report;
    XmlScanner scanner(xml);
    XmlTag tag;

    std::string current_class;  // dotted, package included
    bool in_method = false;
    std::string method_signature;
    MethodCoverage current{};

    auto flush_method = [&]() {
        if (!in_method) return;
        in_method = false;
        // first entry wins: signature matching stays injective
        if (!method_signature.empty() && !report.by_signature.count(method_signature)) {
            report.by_signature[method_signature] = current;
        }
    };

    while (scanner.next(tag)) {
        if (tag.closing) {
            if (tag.name == "method") flush_method();
            continue;
        }
        if (tag.name == "class") {
            current_class = dotted_class_name(tag.attrs["name"]);
        } else if (tag.name == "method") {
            flush_method();
            const std::string& name = tag.attrs["name"];
            const std::string& desc = tag.attrs["desc"];
            current = MethodCoverage{};
            if (name.empty() || name == "<init>" || name == "<clinit>") {
                method_signature.clear();
            } else {
                method_signature =
                    current_class + "#" + name + "(" + descriptor_to_param_list(desc) + ")";
            }
            in_method = !tag.self_closing;
        } else if (tag.name == "counter" && in_method) {
            const std::string& type = tag.attrs["type"];
            int missed = std::atoi(tag.attrs["missed"].c_str());
            int covered = std::atoi(tag.attrs["covered"].c_str());
            if (missed < 0 || covered < 0)
                throw MalformedReport("negative counter in coverage report");
            if (type == "BRANCH") {
                current.branches_covered = covered;
                current.branches_total = covered + missed;
            } else if (type == "LINE") {
                current.lines_covered = covered;
                current.lines_total = covered + missed;
            }
        }
    }
    flush_method();

    for (const auto& focal : focal_signatures) {
        if (!report.by_signature.count(focal)) {
            report.by_signature[focal] = MethodCoverage{};
            report.unmatched_focals.push_back(focal);
        }
    }
    return report;
}

}  // namespace jtgen::toolchain
