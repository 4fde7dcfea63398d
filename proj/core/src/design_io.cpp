#include "pgiso/design_io.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "pgiso/signature.hpp"

namespace pgiso {

namespace {

std::string position_message(int line, int column, const std::string& what) {
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
}

struct Token {
    std::string_view text;
    int column = 0;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

bool blank_or_comment(std::string_view line) {
    for (char c : line) {
        if (c == '#') return true;
        if (c != ' ' && c != '\t' && c != '\r') return false;
    }
    return true;
}

int parse_int_field(const Token& tok, std::string_view key, int line_no) {
    const std::string_view text = tok.text.substr(key.size() + 1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw ParseError(line_no, tok.column,
                         "expected an integer after '" + std::string(key) + "='");
    return value;
}

// Flats paired with source line numbers so validation failures can point at
// the offending line.
struct Body {
    std::vector<Flat> flats;
    std::vector<int> lines;
};

}  // namespace

ParseError::ParseError(int line_no, int column_no, const std::string& what)
    : std::runtime_error(position_message(line_no, column_no, what)),
      line(line_no),
      column(column_no) {}

Design parse_design(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            lines.push_back(text.substr(pos));
            break;
        }
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }

    std::size_t idx = 0;
    while (idx < lines.size() && blank_or_comment(lines[idx])) ++idx;
    if (idx == lines.size()) throw ParseError(static_cast<int>(lines.size()), 1, "empty design file");

    const int header_line = static_cast<int>(idx) + 1;
    const auto header = tokenize(lines[idx]);
    const std::string_view kind = header[0].text;
    if (kind != "spread" && kind != "star")
        throw ParseError(header_line, header[0].column, "expected 'spread' or 'star'");

    std::optional<int> n, t, t0;
    for (std::size_t i = 1; i < header.size(); ++i) {
        const Token& tok = header[i];
        if (tok.text.starts_with("n=")) {
            if (n) throw ParseError(header_line, tok.column, "duplicate field 'n'");
            n = parse_int_field(tok, "n", header_line);
        } else if (tok.text.starts_with("t0=")) {
            if (kind == "spread")
                throw ParseError(header_line, tok.column, "spreads have no 't0' field");
            if (t0) throw ParseError(header_line, tok.column, "duplicate field 't0'");
            t0 = parse_int_field(tok, "t0", header_line);
        } else if (tok.text.starts_with("t=")) {
            if (t) throw ParseError(header_line, tok.column, "duplicate field 't'");
            t = parse_int_field(tok, "t", header_line);
        } else {
            throw ParseError(header_line, tok.column,
                             "unknown field '" + std::string(tok.text) + "'");
        }
    }
    if (!n) throw ParseError(header_line, header[0].column, "missing field 'n'");
    if (!t) throw ParseError(header_line, header[0].column, "missing field 't'");
    if (*n < 1 || *n > kMaxDimension)
        throw ParseError(header_line, header[0].column, "n out of range");
    if (*t < 1 || *t > *n) throw ParseError(header_line, header[0].column, "t out of range");
    if (t0 && (*t0 < 1 || *t0 >= *t))
        throw ParseError(header_line, header[0].column, "t0 out of range");

    Body body;
    for (std::size_t li = idx + 1; li < lines.size(); ++li) {
        if (blank_or_comment(lines[li])) continue;
        const int line_no = static_cast<int>(li) + 1;
        std::vector<Point> pts;
        for (const Token& tok : tokenize(lines[li])) {
            try {
                pts.push_back(label_to_point(tok.text, *n));
            } catch (const std::invalid_argument& e) {
                throw ParseError(line_no, tok.column, e.what());
            }
        }
        try {
            body.flats.push_back(Flat::from_points(std::move(pts)));
        } catch (const std::invalid_argument& e) {
            throw ParseError(line_no, 1, e.what());
        }
        body.lines.push_back(line_no);
    }
    if (body.flats.empty()) throw ParseError(header_line, 1, "design has no flats");

    for (std::size_t i = 0; i < body.flats.size(); ++i)
        if (body.flats[i].t() != *t)
            throw ParseError(body.lines[i], 1,
                             "flat size does not match t=" + std::to_string(*t));

    if (kind == "spread") {
        const auto check = is_spread(body.flats, *n, *t);
        if (!check.ok)
            throw ParseError(header_line, 1,
                             "not a spread: " + std::string(to_string(check.defect)));
        return Spread{*n, *t, std::move(body.flats)};
    }

    if (body.flats.size() < 2)
        throw ParseError(header_line, 1, "star files need at least two rays");
    Star star;
    try {
        star = make_star(std::move(body.flats));
    } catch (const std::invalid_argument& e) {
        throw ParseError(header_line, 1, e.what());
    }
    if (t0 && star.t0 != *t0)
        throw ParseError(header_line, 1,
                         "detected nucleus dimension " + std::to_string(star.t0) +
                             " does not match t0=" + std::to_string(*t0));
    return star;
}

namespace {

std::vector<const Flat*> canonical_order(std::span<const Flat> flats) {
    std::vector<std::pair<Bitstring, const Flat*>> keyed;
    keyed.reserve(flats.size());
    for (const Flat& f : flats) keyed.emplace_back(Bitstring::of_flat(f), &f);
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<const Flat*> out;
    out.reserve(keyed.size());
    for (const auto& [key, f] : keyed) out.push_back(f);
    return out;
}

void render_flat_line(std::ostringstream& out, const Flat& f) {
    bool first = true;
    for (const Point& p : f.points()) {
        if (!first) out << ' ';
        out << point_to_label(p);
        first = false;
    }
    out << '\n';
}

std::vector<std::vector<std::string>> label_rows(std::span<const Flat> flats) {
    std::vector<std::vector<std::string>> rows;
    for (const Flat* f : canonical_order(flats)) {
        std::vector<std::string> row;
        row.reserve(f->size());
        for (const Point& p : f->points()) row.push_back(point_to_label(p));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

std::string render_design(const Spread& d) {
    std::ostringstream out;
    out << "spread n=" << d.n << " t=" << d.t << '\n';
    for (const Flat* f : canonical_order(d.flats)) render_flat_line(out, *f);
    return out.str();
}

std::string render_design(const Star& s) {
    std::ostringstream out;
    out << "star n=" << s.n << " t=" << s.t << " t0=" << s.t0 << '\n';
    for (const Flat* f : canonical_order(s.rays)) render_flat_line(out, *f);
    return out.str();
}

std::string render_design(const Design& d) {
    return std::visit([](const auto& inner) { return render_design(inner); }, d);
}

std::string render_design_json(const Design& d) {
    nlohmann::json j;
    if (const Spread* spread = std::get_if<Spread>(&d)) {
        j["kind"] = "spread";
        j["n"] = spread->n;
        j["t"] = spread->t;
        j["flats"] = label_rows(spread->flats);
    } else {
        const Star& star = std::get<Star>(d);
        j["kind"] = "star";
        j["n"] = star.n;
        j["t"] = star.t;
        j["t0"] = star.t0;
        j["covering"] = star.covering;
        std::vector<std::string> nucleus;
        for (const Point& p : star.nucleus.points()) nucleus.push_back(point_to_label(p));
        j["nucleus"] = nucleus;
        j["flats"] = label_rows(star.rays);
    }
    return j.dump();
}

int design_dimension(const Design& d) {
    return std::visit([](const auto& inner) { return inner.n; }, d);
}

std::string_view design_kind(const Design& d) {
    return std::holds_alternative<Spread>(d) ? "spread" : "star";
}

}  // namespace pgiso
