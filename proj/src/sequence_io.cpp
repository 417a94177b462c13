#include "eulerq/sequence_io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace eulerq {

namespace {

constexpr std::size_t symbols_per_line = 60;

std::uint64_t parse_uint(std::string_view text, std::size_t line, const char* what) {
    std::uint64_t value = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc() || ptr != end)
        throw ParseError(line, std::string("invalid ") + what + " '" + std::string(text) + "'");
    return value;
}

std::string_view expect_key(std::string_view token, std::string_view key, std::size_t line) {
    if (token.substr(0, key.size()) != key)
        throw ParseError(line, "expected '" + std::string(key) + "...' in header, got '" + std::string(token) + "'");
    return token.substr(key.size());
}

std::vector<std::string_view> split_spaces(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const auto next = s.find(' ', pos);
        const auto len = (next == std::string_view::npos ? s.size() : next) - pos;
        out.push_back(s.substr(pos, len));
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return out;
}

} // namespace

void write_sequence(std::ostream& out, const PeriodicSequence& seq) {
    const auto& tag = seq.tag();
    out << "seq " << seq.alphabet_size() << ' ' << seq.period() << " p=" << tag.p << " r=" << tag.r
        << " kind=" << tag.kind << '\n';
    const auto& s = seq.symbols();
    for (std::size_t i = 0; i < s.size(); ++i) {
        out << s[i];
        out << ((i + 1) % symbols_per_line == 0 || i + 1 == s.size() ? '\n' : ' ');
    }
}

PeriodicSequence read_sequence(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line)) throw ParseError(1, "missing header");
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();

    const auto header = split_spaces(line);
    if (header.size() != 6 || header[0] != "seq")
        throw ParseError(line_no, "header must be 'seq <alphabet_size> <period> p=<p> r=<r> kind=<name>'");
    const auto alphabet = parse_uint(header[1], line_no, "alphabet size");
    const auto period = parse_uint(header[2], line_no, "period");
    SequenceTag tag;
    tag.p = parse_uint(expect_key(header[3], "p=", line_no), line_no, "p");
    tag.r = static_cast<unsigned>(parse_uint(expect_key(header[4], "r=", line_no), line_no, "r"));
    tag.kind = std::string(expect_key(header[5], "kind=", line_no));
    if (tag.kind.empty()) throw ParseError(line_no, "empty kind");
    if (alphabet < 2) throw ParseError(line_no, "alphabet size must be >= 2");
    if (period == 0) throw ParseError(line_no, "period must be positive");

    std::vector<std::uint32_t> symbols;
    symbols.reserve(period);
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        for (auto tok : split_spaces(line)) {
            const auto v = parse_uint(tok, line_no, "symbol");
            if (v >= alphabet)
                throw ParseError(line_no, "symbol " + std::to_string(v) + " outside alphabet of size " +
                                              std::to_string(alphabet));
            if (symbols.size() == period)
                throw ParseError(line_no, "more than " + std::to_string(period) + " symbols");
            symbols.push_back(static_cast<std::uint32_t>(v));
        }
    }
    if (symbols.size() != period)
        throw ParseError(line_no, "expected " + std::to_string(period) + " symbols, found " +
                                      std::to_string(symbols.size()));
    return PeriodicSequence(alphabet, std::move(symbols), std::move(tag));
}

} // namespace eulerq
