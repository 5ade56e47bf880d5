#include "exchange/family_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "exchange/errors.hpp"

namespace exchange {

namespace {

bool is_blank(std::string_view line) { return line.find_first_not_of(" \t\r") == std::string_view::npos; }

// Strict decimal: digits only, no sign, no leading '+'.
bool parse_decimal(std::string_view token, long long& value) {
  if (token.empty() || token.size() > 18) return false;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  return ec == std::errc() && ptr == token.data() + token.size() && token.front() != '-';
}

SubsetMask parse_set_line(std::string_view line, int n, int line_no) {
  if (line == "-") return SubsetMask();
  SubsetMask set;
  int previous = 0;
  std::size_t pos = 0;
  while (true) {
    const std::size_t space = line.find(' ', pos);
    const std::string_view token = line.substr(pos, space == std::string_view::npos ? line.size() - pos : space - pos);
    long long value = 0;
    if (!parse_decimal(token, value)) throw FormatError("malformed line", line_no);
    if (value < 1 || value > n) throw FormatError("element out of range", line_no);
    if (value <= previous) throw FormatError("non-increasing line", line_no);
    previous = static_cast<int>(value);
    set = set.with(previous);
    if (space == std::string_view::npos) break;
    pos = space + 1;
  }
  return set;
}

}  // namespace

Family parse_family(std::string_view text) {
  int n = -1;
  int line_no = 0;
  std::vector<SubsetMask> members;
  std::unordered_set<SubsetMask> seen;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line.front() == '#') continue;
    if (is_blank(line)) continue;

    if (n < 0) {
      long long value = 0;
      if (line.substr(0, 2) != "n " || !parse_decimal(line.substr(2), value)) {
        throw FormatError("missing header", line_no);
      }
      if (value < 1 || value > kMaxGroundSize) throw FormatError("ground size out of range", line_no);
      n = static_cast<int>(value);
      continue;
    }
    const SubsetMask set = parse_set_line(line, n, line_no);
    if (!seen.insert(set).second) throw FormatError("duplicate set", line_no);
    members.push_back(set);
  }
  if (n < 0) throw FormatError("missing header", line_no);
  return Family::from_members(n, std::move(members), "file");
}

Family read_family_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_family(buffer.str());
}

std::string format_members(SubsetMask m, char separator) {
  if (m.empty()) return "-";
  std::string out;
  m.for_each([&](int e) {
    if (!out.empty()) out += separator;
    out += std::to_string(e);
  });
  return out;
}

void write_family(std::ostream& out, const Family& family) {
  out << "n " << family.ground_size() << '\n';
  for (SubsetMask m : family.members()) out << format_members(m) << '\n';
}

std::string serialize_family(const Family& family) {
  std::ostringstream out;
  write_family(out, family);
  return out.str();
}

}  // namespace exchange
