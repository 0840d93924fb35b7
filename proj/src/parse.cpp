#include "flab/parse.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "flab/error.hpp"

namespace flab {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

[[noreturn]] void fail(Errc code, int line, std::size_t column,
                       const std::string& msg) {
  throw Error(code, "line " + std::to_string(line) + ", column " +
                        std::to_string(column) + ": " + msg);
}

struct Line {
  int number;
  std::string_view text;  // comment stripped, untrimmed
};

Presentation parse_block(const std::vector<Line>& lines) {
  Presentation p;
  bool have_gens = false;
  struct Pending {
    int line;
    std::size_t column;
    std::string key;
    std::string value;
  };
  std::vector<Pending> words;

  for (const Line& ln : lines) {
    const std::size_t colon = ln.text.find(':');
    if (colon == std::string_view::npos) {
      const std::size_t col = ln.text.size() - trim(ln.text).size() + 1;
      fail(Errc::Syntax, ln.number, col, "expected 'key: value'");
    }
    const std::string key(trim(ln.text.substr(0, colon)));
    const std::string_view raw_value = ln.text.substr(colon + 1);
    const std::string_view value = trim(raw_value);
    const std::size_t lead = raw_value.find_first_not_of(" \t");
    const std::size_t value_col =
        colon + 2 + (lead == std::string_view::npos ? 0 : lead);
    if (key == "name") {
      p.name = std::string(value);
    } else if (key == "gens") {
      if (have_gens) fail(Errc::Syntax, ln.number, 1, "duplicate 'gens' line");
      have_gens = true;
      std::set<std::string> seen;
      for (std::string_view g : split_ws(value)) {
        std::string name(g);
        if (!std::islower(static_cast<unsigned char>(name[0]))) {
          fail(Errc::Syntax, ln.number, value_col,
               "generator names must start with a lowercase letter");
        }
        if (!seen.insert(name).second) {
          fail(Errc::DuplicateGenerator, ln.number, value_col,
               "duplicate generator '" + name + "'");
        }
        p.generators.push_back(std::move(name));
      }
    } else if (key == "rel" || key == "cusp") {
      words.push_back({ln.number, value_col, key, std::string(value)});
    } else if (key == "flags") {
      for (std::string_view f : split_ws(value)) {
        if (f == "3manifold") {
          p.flags.is_3manifold = true;
        } else if (f == "closed") {
          p.flags.is_closed = true;
        } else if (f == "hyperbolic") {
          p.flags.is_hyperbolic = true;
        } else if (f == "knot") {
          p.flags.is_knot_exterior = true;
        } else {
          fail(Errc::Syntax, ln.number, value_col, "unknown flag '" + std::string(f) + "'");
        }
      }
    } else {
      fail(Errc::Syntax, ln.number, 1, "unknown key '" + key + "'");
    }
  }
  if (!have_gens) {
    fail(Errc::Syntax, lines.front().number, 1, "block has no 'gens' line");
  }
  for (const Pending& w : words) {
    try {
      if (w.key == "rel") {
        p.relators.push_back(parse_word(w.value, p.generators));
      } else {
        const std::size_t bar = w.value.find('|');
        if (bar == std::string::npos) {
          fail(Errc::Syntax, w.line, w.column, "cusp needs 'm | l'");
        }
        p.cusps.push_back({parse_word(w.value.substr(0, bar), p.generators),
                           parse_word(w.value.substr(bar + 1), p.generators)});
      }
    } catch (const Error& e) {
      if (e.code() == Errc::Syntax) throw;
      // Drop the "Code: " prefix; fail adds it again.
      const std::string msg = e.what();
      fail(e.code(), w.line, w.column, msg.substr(errc_name(e.code()).size() + 2));
    }
  }
  return p;
}

std::vector<std::vector<Line>> split_blocks(std::string_view text) {
  std::vector<std::vector<Line>> blocks;
  std::vector<Line> cur;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    ++number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    const bool blank_raw = trim(text.substr(pos, nl - pos)).empty();
    if (trim(line).empty()) {
      // A whole-line comment does not end a block; a blank line does.
      if (blank_raw && !cur.empty()) {
        blocks.push_back(std::move(cur));
        cur.clear();
      }
    } else {
      cur.push_back({number, line});
    }
    if (nl == text.size()) break;
    pos = nl + 1;
  }
  if (!cur.empty()) blocks.push_back(std::move(cur));
  return blocks;
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  auto blocks = split_blocks(text);
  if (blocks.empty()) fail(Errc::Syntax, 1, 1, "no presentation found");
  if (blocks.size() > 1) {
    fail(Errc::Syntax, blocks[1].front().number, 1,
         "expected a single presentation block");
  }
  return parse_block(blocks.front());
}

std::vector<ParsedBlock> parse_presentation_blocks(std::string_view text) {
  std::vector<ParsedBlock> out;
  for (const auto& block : split_blocks(text)) {
    ParsedBlock pb;
    pb.first_line = block.front().number;
    try {
      pb.presentation = parse_block(block);
      pb.ok = true;
    } catch (const Error& e) {
      pb.error = e.what();
    }
    out.push_back(std::move(pb));
  }
  return out;
}

std::vector<Presentation> parse_presentations(std::string_view text) {
  std::vector<Presentation> out;
  for (const auto& block : split_blocks(text)) out.push_back(parse_block(block));
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace flab
