#include "edgewalk/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace edgewalk {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string::npos) {
      if (pos < text.size()) lines.push_back(text.substr(pos));
      break;
    }
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return lines;
}

const char* skip_ws(const char* p, const char* end) {
  while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
  return p;
}

long parse_long(const char*& p, const char* end, int line) {
  long value = 0;
  auto [next, ec] = std::from_chars(p, end, value);
  if (ec != std::errc())
    throw ParseError(line, "expected an integer");
  p = next;
  return value;
}

double parse_double(const char*& p, const char* end, int line) {
  double value = 0;
  auto [next, ec] = std::from_chars(p, end, value);
  if (ec != std::errc())
    throw ParseError(line, "expected a number");
  p = next;
  return value;
}

std::string format_double(double v) {
  char buf[32];
  int len = std::snprintf(buf, sizeof buf, "%.17g", v);
  return std::string(buf, len);
}

}  // namespace

std::string format_set_system(const SetSystem& sys) {
  std::ostringstream out;
  out << sys.n << ' ' << sys.m() << '\n';
  for (const auto& s : sys.sets) {
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (k) out << ' ';
      out << s[k];
    }
    out << '\n';
  }
  return out.str();
}

SetSystem parse_set_system(const std::string& text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, "empty file");

  const char* p = lines[0].data();
  const char* end = p + lines[0].size();
  p = skip_ws(p, end);
  long n = parse_long(p, end, 1);
  p = skip_ws(p, end);
  long m = parse_long(p, end, 1);
  p = skip_ws(p, end);
  if (p != end) throw ParseError(1, "trailing characters after \"n m\"");
  if (n < 0 || m < 0) throw ParseError(1, "n and m must be nonnegative");
  if (long(lines.size()) < 1 + m)
    throw ParseError(int(lines.size()),
                     "expected " + std::to_string(m) + " set lines");

  std::vector<std::vector<int>> sets;
  sets.reserve(m);
  for (long j = 0; j < m; ++j) {
    const int line_no = int(j) + 2;
    const std::string& line = lines[1 + j];
    const char* q = line.data();
    const char* qend = q + line.size();
    std::vector<int> s;
    q = skip_ws(q, qend);
    while (q < qend) {
      long idx = parse_long(q, qend, line_no);
      if (idx < 0 || idx >= n)
        throw ParseError(line_no, "index " + std::to_string(idx) +
                                      " out of range [0," + std::to_string(n) +
                                      ")");
      if (!s.empty() && idx <= s.back())
        throw ParseError(line_no, "indices must be strictly increasing");
      s.push_back(int(idx));
      q = skip_ws(q, qend);
    }
    sets.push_back(std::move(s));
  }
  for (std::size_t j = 1 + m; j < lines.size(); ++j)
    if (!lines[j].empty())
      throw ParseError(int(j) + 1, "unexpected content after last set");
  return SetSystem(int(n), std::move(sets));
}

void save_set_system(const SetSystem& sys, const std::string& path) {
  write_file(path, format_set_system(sys));
}

SetSystem load_set_system(const std::string& path) {
  return parse_set_system(read_file(path));
}

std::string format_matrix_csv(const ConstraintSet& cs) {
  std::ostringstream out;
  for (int j = 0; j < cs.m; ++j) {
    const double* r = cs.row(j);
    for (int i = 0; i < cs.n; ++i) {
      if (i) out << ',';
      out << format_double(r[i]);
    }
    out << '\n';
  }
  return out.str();
}

ConstraintSet parse_matrix_csv(const std::string& text) {
  const auto lines = split_lines(text);
  std::vector<double> flat;
  int n = -1;
  int m = 0;
  for (std::size_t j = 0; j < lines.size(); ++j) {
    const int line_no = int(j) + 1;
    if (lines[j].empty() || lines[j] == "\r") {
      if (j + 1 != lines.size())
        throw ParseError(line_no, "empty row in matrix");
      break;
    }
    const char* p = lines[j].data();
    const char* end = p + lines[j].size();
    int cols = 0;
    while (true) {
      p = skip_ws(p, end);
      flat.push_back(parse_double(p, end, line_no));
      ++cols;
      p = skip_ws(p, end);
      if (p == end) break;
      if (*p != ',') throw ParseError(line_no, "expected ','");
      ++p;
    }
    if (n == -1) {
      n = cols;
    } else if (cols != n) {
      throw ParseError(line_no, "row has " + std::to_string(cols) +
                                    " columns, expected " + std::to_string(n));
    }
    ++m;
  }
  if (m == 0) throw ParseError(1, "empty matrix");
  return ConstraintSet(n, m, std::move(flat));
}

void save_matrix(const ConstraintSet& cs, const std::string& path) {
  write_file(path, format_matrix_csv(cs));
}

ConstraintSet load_matrix(const std::string& path) {
  return parse_matrix_csv(read_file(path));
}

namespace {

bool looks_like_json(const std::string& text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    return c == '{' || c == '[';
  }
  return false;
}

std::vector<double> parse_number_line(const std::string& text) {
  std::vector<double> values;
  const char* p = text.data();
  const char* end = p + text.size();
  while (true) {
    while (p < end && (*p == ' ' || *p == '\t' || *p == '\r' || *p == '\n'))
      ++p;
    if (p == end) break;
    values.push_back(parse_double(p, end, 1));
  }
  return values;
}

}  // namespace

Coloring load_coloring(const std::string& path) {
  const std::string text = read_file(path);
  std::vector<int> chi;
  if (looks_like_json(text)) {
    auto doc = nlohmann::json::parse(text);
    const auto& arr = doc.is_array() ? doc : doc.at("chi");
    for (const auto& v : arr) chi.push_back(v.get<int>());
  } else {
    for (double v : parse_number_line(text)) chi.push_back(int(v));
  }
  return Coloring(std::move(chi));
}

std::vector<double> load_point(const std::string& path) {
  const std::string text = read_file(path);
  if (looks_like_json(text)) {
    auto doc = nlohmann::json::parse(text);
    const auto& arr = doc.is_array() ? doc : doc.at("x");
    std::vector<double> x;
    for (const auto& v : arr) x.push_back(v.get<double>());
    return x;
  }
  return parse_number_line(text);
}

GeneratorSpec parse_generator_spec_json(const std::string& text) {
  const auto doc = nlohmann::json::parse(text);
  GeneratorSpec spec;
  spec.kind = parse_generator_kind(doc.at("kind").get<std::string>());
  spec.n = doc.at("n").get<int>();
  spec.m = doc.at("m").get<int>();
  if (doc.contains("param")) spec.param = doc.at("param").get<double>();
  if (doc.contains("seed")) spec.seed = doc.at("seed").get<std::uint64_t>();
  return spec;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write file: " + path);
  out << content;
  if (!out) throw ValidationError("write failed: " + path);
}

}  // namespace edgewalk
