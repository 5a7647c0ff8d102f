#include "pratt/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace pratt {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

[[noreturn]] void fail(int line_no, const std::string& what) {
  throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Family load_family(std::istream& in, std::vector<std::string>* warnings) {
  std::string line;
  int line_no = 0;
  bool saw_version = false, saw_size = false;
  int size = 0;
  std::optional<std::vector<std::string>> labels;
  std::vector<Word> words;

  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto toks = tokens_of(line);
    if (toks.empty()) continue;

    if (!saw_version) {
      if (toks.size() != 2 || toks[0] != "pratt-family" || toks[1] != "v1")
        fail(line_no, "expected header 'pratt-family v1'");
      saw_version = true;
      continue;
    }
    if (toks[0] == "size") {
      if (saw_size) fail(line_no, "duplicate size line");
      if (toks.size() != 2) fail(line_no, "expected 'size N'");
      try {
        size = std::stoi(toks[1]);
      } catch (const std::exception&) {
        fail(line_no, "size is not a number: " + toks[1]);
      }
      if (size < 0) fail(line_no, "size must be nonnegative");
      saw_size = true;
      continue;
    }
    if (!saw_size) fail(line_no, "size must come before '" + toks[0] + "'");
    if (toks[0] == "labels") {
      if (labels) fail(line_no, "duplicate labels line");
      if (static_cast<int>(toks.size()) - 1 != size)
        fail(line_no, "expected " + std::to_string(size) + " labels, got " +
                          std::to_string(toks.size() - 1));
      labels = std::vector<std::string>(toks.begin() + 1, toks.end());
      continue;
    }
    if (toks[0] == "word") {
      if (toks.size() != 2) fail(line_no, "expected 'word BITS'");
      if (static_cast<int>(toks[1].size()) != size)
        fail(line_no, "word length " + std::to_string(toks[1].size()) +
                          " does not match size " + std::to_string(size));
      Word w = [&] {
        try {
          return Word::from_string(toks[1]);
        } catch (const Error& e) {
          fail(line_no, e.what());
        }
      }();
      if (std::find(words.begin(), words.end(), w) != words.end()) {
        if (warnings)
          warnings->push_back("line " + std::to_string(line_no) + ": duplicate word " +
                              toks[1] + " ignored");
      } else {
        words.push_back(std::move(w));
      }
      continue;
    }
    fail(line_no, "unknown directive '" + toks[0] + "'");
  }
  if (!saw_version) throw ParseError("empty input: missing 'pratt-family v1' header");
  if (!saw_size) throw ParseError("missing 'size N' line");

  GroundSet ground = labels ? GroundSet(size, *labels) : GroundSet(size);
  return Family::canonicalize(std::move(ground), std::move(words));
}

Family load_family_file(const std::string& path, std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path);
  try {
    return load_family(in, warnings);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void save_family(std::ostream& out, const Family& f) {
  out << "pratt-family v1\n";
  out << "size " << f.ground_size() << "\n";
  if (f.ground().labels) {
    out << "labels";
    for (const auto& l : *f.ground().labels) out << ' ' << l;
    out << "\n";
  }
  for (const auto& w : f) out << "word " << w.to_string() << "\n";
}

void save_family_file(const std::string& path, const Family& f) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open file for writing: " + path);
  save_family(out, f);
}

std::string render_crossword(const Crossword& c) {
  std::string out;
  for (int a = 0; a < c.ground_size(); ++a) {
    out += c.row(a).to_string();
    out += '\n';
  }
  return out;
}

}  // namespace pratt
