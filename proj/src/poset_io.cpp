#include "orderpoly/poset_io.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace orderpoly {

PosetParseError::PosetParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line), column_(column), message_(message)
{
}

namespace {

struct Token {
    std::string_view text;
    std::size_t column; // 1-based
};

std::vector<Token> tokenize(std::string_view line)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        const char c = line[i];
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            continue;
        }
        if (c == '<' || c == ':') {
            out.push_back({line.substr(i, 1), i + 1});
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r' && line[j] != '<'
               && line[j] != ':') {
            ++j;
        }
        out.push_back({line.substr(i, j - i), i + 1});
        i = j;
    }
    return out;
}

class LineParser {
public:
    LineParser(std::size_t line_no, std::string_view line) : line_no_(line_no), tokens_(tokenize(line)), line_(line) {}

    [[noreturn]] void fail(std::size_t column, const std::string& msg) const
    {
        throw PosetParseError(line_no_, column, msg);
    }

    const std::vector<Token>& tokens() const { return tokens_; }

    std::size_t end_column() const { return line_.size() + 1; }

    unsigned long long number(const Token& t, const char* what) const
    {
        unsigned long long v = 0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc{} || ptr != t.text.data() + t.text.size()) {
            fail(t.column, std::string("expected ") + what + ", found '" + std::string(t.text) + "'");
        }
        return v;
    }

private:
    std::size_t line_no_;
    std::vector<Token> tokens_;
    std::string_view line_;
};

} // namespace

LabeledPoset parse_poset_file(std::string_view text)
{
    std::optional<std::size_t> n;
    std::optional<Labeling> labels;
    std::vector<std::pair<std::size_t, std::size_t>> relations;
    std::vector<std::uint64_t> above; // running transitive closure, for positional cycle errors

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        LineParser lp(line_no, line);
        const auto& tok = lp.tokens();
        if (tok.empty()) {
            continue;
        }

        if (tok[0].text == "elements") {
            if (n) {
                lp.fail(tok[0].column, "duplicate elements line");
            }
            if (tok.size() < 2 || tok[1].text != ":") {
                lp.fail(tok.size() < 2 ? lp.end_column() : tok[1].column, "expected ':' after 'elements'");
            }
            if (tok.size() < 3) {
                lp.fail(lp.end_column(), "expected the number of elements");
            }
            if (tok.size() > 3) {
                lp.fail(tok[3].column, "unexpected text after the number of elements");
            }
            const auto count = lp.number(tok[2], "a number of elements");
            if (count > kMaxElements) {
                lp.fail(tok[2].column, "at most " + std::to_string(kMaxElements) + " elements are supported");
            }
            n = static_cast<std::size_t>(count);
            above.assign(*n, 0);
            continue;
        }
        if (!n) {
            lp.fail(tok[0].column, "the first line must be 'elements: n'");
        }

        if (tok[0].text == "labels") {
            if (labels) {
                lp.fail(tok[0].column, "duplicate labels line");
            }
            if (tok.size() < 2 || tok[1].text != ":") {
                lp.fail(tok.size() < 2 ? lp.end_column() : tok[1].column, "expected ':' after 'labels'");
            }
            Labeling omega;
            std::unordered_map<unsigned long long, std::size_t> seen;
            for (std::size_t i = 2; i < tok.size(); ++i) {
                const auto v = lp.number(tok[i], "a positive label");
                if (v == 0 || v > 0xFFFFFFFFULL) {
                    lp.fail(tok[i].column, "labels must be positive integers below 2^32");
                }
                if (auto [it, fresh] = seen.emplace(v, tok[i].column); !fresh) {
                    lp.fail(tok[i].column, "label " + std::to_string(v) + " is used twice");
                }
                omega.push_back(static_cast<unsigned>(v));
            }
            if (omega.size() != *n) {
                lp.fail(tok.size() > 2 ? tok.back().column : lp.end_column(),
                        "expected " + std::to_string(*n) + " labels, found " + std::to_string(omega.size()));
            }
            labels = std::move(omega);
            continue;
        }

        if (tok.size() != 3 || tok[1].text != "<") {
            const std::size_t col = tok.size() >= 2 && tok[1].text != "<" ? tok[1].column
                                    : tok.size() > 3                    ? tok[3].column
                                                                        : tok[0].column;
            lp.fail(col, "expected a relation 'i < j'");
        }
        const auto x = lp.number(tok[0], "an element index");
        const auto y = lp.number(tok[2], "an element index");
        if (x >= *n) {
            lp.fail(tok[0].column, "element " + std::to_string(x) + " is out of range 0.." + std::to_string(*n - 1));
        }
        if (y >= *n) {
            lp.fail(tok[2].column, "element " + std::to_string(y) + " is out of range 0.." + std::to_string(*n - 1));
        }
        if (x == y) {
            lp.fail(tok[0].column, "an element cannot be below itself");
        }
        if ((above[y] >> x) & 1U) {
            lp.fail(tok[0].column, "relation " + std::to_string(x) + " < " + std::to_string(y) + " creates a cycle");
        }
        relations.emplace_back(x, y);
        const std::uint64_t upper = above[y] | (std::uint64_t{1} << y);
        for (std::size_t a = 0; a < *n; ++a) {
            if (a == x || ((above[a] >> x) & 1U)) {
                above[a] |= upper;
            }
        }
    }
    if (!n) {
        throw PosetParseError(line_no == 0 ? 1 : line_no, 1, "missing 'elements: n' line");
    }
    Poset p = make_poset(*n, relations);
    Labeling omega = labels ? std::move(*labels) : natural_labeling(p);
    return LabeledPoset(std::move(p), std::move(omega));
}

std::string format_poset_file(const LabeledPoset& lp)
{
    std::ostringstream os;
    os << "elements: " << lp.size() << '\n';
    os << "labels:";
    for (auto l : lp.omega()) {
        os << ' ' << l;
    }
    os << '\n';
    for (auto [x, y] : lp.poset().covers()) {
        os << x << " < " << y << '\n';
    }
    return os.str();
}

} // namespace orderpoly
