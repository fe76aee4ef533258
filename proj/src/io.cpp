#include "pencil/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace pencil {

namespace {

std::string strip_comment(const std::string& line) {
  auto hash = line.find('#');
  std::string out = hash == std::string::npos ? line : line.substr(0, hash);
  while (!out.empty() && (out.back() == ' ' || out.back() == '\t' || out.back() == '\r'))
    out.pop_back();
  return out;
}

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream iss(line);
  std::string tok;
  while (iss >> tok) tokens.push_back(tok);
  return tokens;
}

class LineReader {
 public:
  explicit LineReader(std::istream& is) : is_(is) {}

  // Next line with comments stripped, empty lines included; nullopt at EOF.
  std::optional<std::string> any_line() {
    std::string raw;
    if (!std::getline(is_, raw)) return std::nullopt;
    ++line_no_;
    return strip_comment(raw);
  }

  // Next non-empty line.
  std::optional<std::string> content_line() {
    while (auto line = any_line()) {
      if (!tokenize(*line).empty()) return line;
    }
    return std::nullopt;
  }

  std::size_t line_no() const { return line_no_; }

 private:
  std::istream& is_;
  std::size_t line_no_ = 0;
};

std::size_t parse_count(const std::string& token, const LineReader& reader, const char* what) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
    throw FormatError(std::string("malformed ") + what + ": '" + token + "'", reader.line_no());
  return static_cast<std::size_t>(std::stoull(token));
}

Field parse_field(const std::string& token, const LineReader& reader) {
  auto field = Field::parse(token);
  if (!field) throw FormatError("unknown field '" + token + "'", reader.line_no());
  return *field;
}

Scalar parse_scalar_at(Field field, const std::string& token, const LineReader& reader) {
  try {
    return Scalar::parse(field, token);
  } catch (const Error& e) {
    throw FormatError(e.what(), reader.line_no());
  }
}

std::vector<Scalar> read_scalar_row(LineReader& reader, Field field, std::size_t expected,
                                    const char* what) {
  if (expected == 0) {
    auto line = reader.any_line();
    if (!line) throw FormatError(std::string("unexpected end of file in ") + what,
                                 reader.line_no() + 1);
    if (!tokenize(*line).empty())
      throw FormatError(std::string("expected an empty row in ") + what, reader.line_no());
    return {};
  }
  auto line = reader.content_line();
  if (!line)
    throw FormatError(std::string("unexpected end of file in ") + what, reader.line_no() + 1);
  std::vector<std::string> tokens = tokenize(*line);
  if (tokens.size() != expected)
    throw FormatError(std::string(what) + ": expected " + std::to_string(expected) +
                          " scalars, found " + std::to_string(tokens.size()),
                      reader.line_no());
  std::vector<Scalar> out;
  out.reserve(expected);
  for (const auto& tok : tokens) out.push_back(parse_scalar_at(field, tok, reader));
  return out;
}

void require_trailing_blank(LineReader& reader) {
  if (auto line = reader.content_line())
    throw FormatError("unexpected trailing content: '" + *line + "'", reader.line_no());
}

void write_scalar_row(std::ostream& os, const std::vector<Scalar>& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) os << ' ';
    os << row[i].to_string();
  }
  os << '\n';
}

}  // namespace

void write_pencil(std::ostream& os, const Pencil& p) {
  os << "pencil " << p.map_count() << ' ' << p.source_dim() << ' ' << p.target_dim() << ' '
     << p.field().to_string() << '\n';
  for (std::size_t i = 0; i < p.map_count(); ++i) {
    os << "matrix " << (i + 1) << '\n';
    for (std::size_t r = 0; r < p.target_dim(); ++r) write_scalar_row(os, p.map(i).row(r));
  }
}

Pencil read_pencil(std::istream& is) {
  LineReader reader(is);
  auto header = reader.content_line();
  if (!header) throw FormatError("missing pencil header", 1);
  std::vector<std::string> tokens = tokenize(*header);
  if (tokens.size() != 5 || tokens[0] != "pencil")
    throw FormatError("expected header 'pencil <n> <a> <b> <field>'", reader.line_no());
  const std::size_t n = parse_count(tokens[1], reader, "matrix count");
  const std::size_t a = parse_count(tokens[2], reader, "source dimension");
  const std::size_t b = parse_count(tokens[3], reader, "target dimension");
  if (n == 0) throw FormatError("a pencil needs at least one matrix", reader.line_no());
  Field field = parse_field(tokens[4], reader);

  Pencil out(field, n, a, b);
  for (std::size_t i = 0; i < n; ++i) {
    auto marker = reader.content_line();
    if (!marker)
      throw FormatError("unexpected end of file before matrix " + std::to_string(i + 1),
                        reader.line_no() + 1);
    std::vector<std::string> mt = tokenize(*marker);
    if (mt.size() != 2 || mt[0] != "matrix" ||
        parse_count(mt[1], reader, "matrix index") != i + 1)
      throw FormatError("expected 'matrix " + std::to_string(i + 1) + "'", reader.line_no());
    Matrix m(field, b, a);
    for (std::size_t r = 0; r < b; ++r) m.set_row(r, read_scalar_row(reader, field, a, "matrix row"));
    out.set_map(i, std::move(m));
  }
  require_trailing_blank(reader);
  return out;
}

std::string pencil_to_string(const Pencil& p) {
  std::ostringstream oss;
  write_pencil(oss, p);
  return oss.str();
}

Pencil pencil_from_string(const std::string& text) {
  std::istringstream iss(text);
  return read_pencil(iss);
}

void write_quadrics(std::ostream& os, const QuadricsFile& q) {
  os << "quadrics " << q.vars << ' ' << q.forms.size() << ' ' << q.field.to_string() << '\n';
  for (const auto& form : q.forms) write_scalar_row(os, form.coeffs());
}

QuadricsFile read_quadrics(std::istream& is) {
  LineReader reader(is);
  auto header = reader.content_line();
  if (!header) throw FormatError("missing quadrics header", 1);
  std::vector<std::string> tokens = tokenize(*header);
  if (tokens.size() != 4 || tokens[0] != "quadrics")
    throw FormatError("expected header 'quadrics <n> <m> <field>'", reader.line_no());
  QuadricsFile out;
  out.vars = parse_count(tokens[1], reader, "variable count");
  const std::size_t m = parse_count(tokens[2], reader, "quadric count");
  out.field = parse_field(tokens[3], reader);
  if (out.vars == 0) throw FormatError("quadrics need at least one variable", reader.line_no());
  for (std::size_t i = 0; i < m; ++i)
    out.forms.emplace_back(out.vars,
                           read_scalar_row(reader, out.field, pair_count(out.vars), "quadric row"));
  require_trailing_blank(reader);
  return out;
}

std::string quadrics_to_string(const QuadricsFile& q) {
  std::ostringstream oss;
  write_quadrics(oss, q);
  return oss.str();
}

QuadricsFile quadrics_from_string(const std::string& text) {
  std::istringstream iss(text);
  return read_quadrics(iss);
}

void write_points(std::ostream& os, const PointsFile& pf) {
  os << "points " << pf.coord_count << ' ' << pf.points.size() << ' ' << pf.field.to_string()
     << '\n';
  for (const auto& point : pf.points) write_scalar_row(os, point.coords());
}

PointsFile read_points(std::istream& is) {
  LineReader reader(is);
  auto header = reader.content_line();
  if (!header) throw FormatError("missing points header", 1);
  std::vector<std::string> tokens = tokenize(*header);
  if (tokens.size() != 4 || tokens[0] != "points")
    throw FormatError("expected header 'points <m> <count> <field>'", reader.line_no());
  PointsFile out;
  out.coord_count = parse_count(tokens[1], reader, "coordinate count");
  const std::size_t count = parse_count(tokens[2], reader, "point count");
  out.field = parse_field(tokens[3], reader);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<Scalar> coords = read_scalar_row(reader, out.field, out.coord_count, "point row");
    try {
      out.points.emplace_back(std::move(coords));
    } catch (const Error& e) {
      throw FormatError(e.what(), reader.line_no());
    }
  }
  require_trailing_blank(reader);
  return out;
}

std::string points_to_string(const PointsFile& pf) {
  std::ostringstream oss;
  write_points(oss, pf);
  return oss.str();
}

PointsFile points_from_string(const std::string& text) {
  std::istringstream iss(text);
  return read_points(iss);
}

void write_subspace(std::ostream& os, const Subspace& s) {
  os << "subspace " << s.ambient_dim() << ' ' << s.dim() << ' ' << s.field().to_string() << '\n';
  for (std::size_t r = 0; r < s.dim(); ++r) write_scalar_row(os, s.basis().row(r));
}

}  // namespace pencil
