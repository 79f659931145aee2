#include "binmat/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "binmat/error.hpp"

namespace binmat {

namespace {

[[noreturn]] void malformed(std::size_t line, const std::string& what) {
  throw MatroidError(ErrorCode::kMalformedInput,
                     "line " + std::to_string(line) + ": " + what);
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

}  // namespace

NamedMatroid parse_bm(std::istream& in) {
  std::vector<std::pair<std::size_t, std::string>> lines;
  std::size_t lineno = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    std::string t = trim(raw);
    if (t.empty() || t.front() == '#') continue;
    lines.emplace_back(lineno, std::move(t));
  }
  std::size_t at = 0;
  auto keyword = [&](std::string_view key) -> std::string {
    if (at >= lines.size()) malformed(lineno, "missing '" + std::string(key) + "' line");
    const auto& [no, text] = lines[at++];
    const auto space = text.find_first_of(" \t");
    if (text.substr(0, space) != key) malformed(no, "expected '" + std::string(key) + "'");
    return space == std::string::npos ? std::string{} : trim(text.substr(space));
  };

  NamedMatroid out;
  out.name = keyword("name");
  const std::size_t rank_line = at < lines.size() ? lines[at].first : lineno;
  const std::string rank_text = keyword("rank");
  std::size_t rank = 0;
  try {
    std::size_t used = 0;
    const long long parsed = std::stoll(rank_text, &used);
    if (used != rank_text.size() || parsed < 0) throw std::invalid_argument("rank");
    rank = static_cast<std::size_t>(parsed);
  } catch (const std::exception&) {
    malformed(rank_line, "rank must be a non-negative integer");
  }
  const std::vector<std::string> labels = split(keyword("elements"));

  GF2Matrix rep(rank, labels.size());
  for (std::size_t r = 0; r < rank; ++r) {
    if (at >= lines.size()) malformed(lineno, "expected " + std::to_string(rank) + " matrix rows");
    const auto& [no, text] = lines[at++];
    const auto entries = split(text);
    if (entries.size() != labels.size()) {
      malformed(no, "row has " + std::to_string(entries.size()) + " entries, expected " +
                        std::to_string(labels.size()));
    }
    for (std::size_t c = 0; c < entries.size(); ++c) {
      if (entries[c] != "0" && entries[c] != "1") malformed(no, "entries must be 0 or 1");
      rep.set(r, c, entries[c] == "1");
    }
  }
  if (at != lines.size()) malformed(lines[at].first, "unexpected trailing content");

  out.matroid = Matroid::standard_form(rep, labels);
  if (out.matroid.rank() != rank) {
    malformed(rank_line, "declared rank " + std::to_string(rank) + " but rows have rank " +
                             std::to_string(out.matroid.rank()));
  }
  return out;
}

NamedMatroid parse_bm(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_bm(in);
}

NamedMatroid read_bm_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw MatroidError(ErrorCode::kMalformedInput, "cannot open '" + path.string() + "'");
  }
  return parse_bm(in);
}

void write_bm(std::ostream& out, std::string_view name, const Matroid& m) {
  out << "name " << name << '\n';
  out << "rank " << m.rank() << '\n';
  out << "elements";
  for (const auto& l : m.labels()) out << ' ' << l;
  out << '\n';
  out << m.representation().to_string();
}

std::string to_bm(std::string_view name, const Matroid& m) {
  std::ostringstream out;
  write_bm(out, name, m);
  return out.str();
}

}  // namespace binmat
