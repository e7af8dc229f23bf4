#include "loclab/group_io.hpp"

#include <fstream>
#include <sstream>

namespace loclab {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

PermGroup parse_group_file(const std::string& text) {
  std::istringstream in(text);
  std::string line, name, gens_text;
  int degree = -1;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    size_t colon = line.find(':');
    if (colon == std::string::npos)
      throw Error("parse-error", "expected 'key: value', got: " + line);
    std::string key = trim(line.substr(0, colon));
    std::string value = trim(line.substr(colon + 1));
    if (key == "name") {
      name = value;
    } else if (key == "degree") {
      try {
        degree = std::stoi(value);
      } catch (const std::exception&) {
        throw Error("parse-error", "bad degree: " + value);
      }
    } else if (key == "gens") {
      gens_text = value;
    } else {
      throw Error("parse-error", "unknown key: " + key);
    }
  }
  if (name.empty()) throw Error("parse-error", "missing 'name' field");
  if (degree < 1) throw Error("parse-error", "missing or invalid 'degree' field");
  if (gens_text.empty()) throw Error("parse-error", "missing 'gens' field");

  std::vector<Perm> gens;
  std::istringstream gs(gens_text);
  std::string piece;
  while (std::getline(gs, piece, ';')) {
    piece = trim(piece);
    if (piece.empty()) continue;
    gens.push_back(Perm::from_cycles(piece, degree));
  }
  if (gens.empty()) throw Error("parse-error", "no generators given");
  return PermGroup(degree, std::move(gens), name);
}

PermGroup load_group_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("io-error", "cannot open group file: " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_group_file(buf.str());
}

}  // namespace loclab
