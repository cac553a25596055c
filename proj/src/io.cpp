#include "pentasol/io.hpp"

#include <sstream>

namespace pentasol {

namespace {

struct Token {
  int col;  // 1-based
  std::string text;
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    size_t start = i;
    while (i < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    out.push_back({static_cast<int>(start) + 1, line.substr(start, i - start)});
  }
  return out;
}

// Line cursor over the input text; blank lines are skipped.
struct Lines {
  std::vector<std::string> raw;
  std::vector<int> numbers;
  size_t pos = 0;

  explicit Lines(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
      ++number;
      if (tokenize(line).empty()) continue;
      raw.push_back(line);
      numbers.push_back(number);
    }
  }

  bool done() const { return pos >= raw.size(); }
  int line_number() const {
    return done() ? (numbers.empty() ? 1 : numbers.back() + 1)
                  : numbers[pos];
  }
  std::vector<Token> next() {
    if (done()) throw parse_error(line_number(), 0, "unexpected end of input");
    return tokenize(raw[pos++]);
  }
  std::vector<Token> peek() const {
    return done() ? std::vector<Token>{} : tokenize(raw[pos]);
  }
};

int parse_int(const Token& t, int line) {
  try {
    size_t used = 0;
    int v = std::stoi(t.text, &used);
    if (used != t.text.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw parse_error(line, t.col, "expected an integer, got '" + t.text + "'");
  }
}

int parse_entry(const Token& t, int line, int n) {
  int v = parse_int(t, line);
  if (v < 0 || v >= n)
    throw parse_error(line, t.col,
                      "entry " + std::to_string(v) + " out of range [0," +
                          std::to_string(n) + ")");
  return v;
}

std::vector<int> parse_row(Lines& lines, int n) {
  int line = lines.line_number();
  auto tokens = lines.next();
  if (static_cast<int>(tokens.size()) != n)
    throw parse_error(line, 0,
                      "expected " + std::to_string(n) + " entries, got " +
                          std::to_string(tokens.size()));
  std::vector<int> row;
  row.reserve(n);
  for (const auto& t : tokens) row.push_back(parse_entry(t, line, n));
  return row;
}

FiniteSemigroup parse_cayley_block(Lines& lines) {
  int header_line = lines.line_number();
  auto header = lines.next();
  if (header.empty() || header.size() > 2)
    throw parse_error(header_line, 0, "expected 'n [identity-index]'");
  int n = parse_int(header[0], header_line);
  if (n <= 0)
    throw parse_error(header_line, header[0].col,
                      "element count must be positive");
  std::optional<int> identity;
  if (header.size() == 2)
    identity = parse_entry(header[1], header_line, n);
  std::vector<int> table;
  table.reserve(n * n);
  for (int x = 0; x < n; ++x) {
    auto row = parse_row(lines, n);
    table.insert(table.end(), row.begin(), row.end());
  }
  return FiniteSemigroup(n, std::move(table), identity);
}

ElementMap parse_map_block(Lines& lines, int n) {
  std::vector<int> image(n, -1);
  for (int i = 0; i < n; ++i) {
    int line = lines.line_number();
    auto tokens = lines.next();
    if (tokens.size() != 3 || tokens[1].text != "->")
      throw parse_error(line, 0, "expected a map line 'x -> y'");
    int x = parse_entry(tokens[0], line, n);
    int y = parse_entry(tokens[2], line, n);
    if (image[x] >= 0)
      throw parse_error(line, tokens[0].col,
                        "duplicate source " + std::to_string(x));
    image[x] = y;
  }
  return ElementMap(n, std::move(image));
}

const char* kFlagNames[] = {"idempotent", "involutive", "nondegenerate",
                            "commutative", "cocommutative"};

}  // namespace

FiniteSemigroup parse_cayley(const std::string& text) {
  Lines lines(text);
  auto s = parse_cayley_block(lines);
  if (!lines.done())
    throw parse_error(lines.line_number(), 0, "unexpected trailing content");
  return s;
}

std::string format_cayley(const FiniteSemigroup& s) {
  std::ostringstream out;
  out << s.size();
  if (s.identity()) out << ' ' << *s.identity();
  out << '\n';
  for (int x = 0; x < s.size(); ++x) {
    for (int y = 0; y < s.size(); ++y)
      out << (y ? " " : "") << s.mul(x, y);
    out << '\n';
  }
  return out.str();
}

std::vector<int> parse_theta(const std::string& text, int n) {
  Lines lines(text);
  std::vector<int> theta;
  theta.reserve(n * n);
  for (int x = 0; x < n; ++x) {
    auto row = parse_row(lines, n);
    theta.insert(theta.end(), row.begin(), row.end());
  }
  if (!lines.done())
    throw parse_error(lines.line_number(), 0, "unexpected trailing content");
  return theta;
}

PentagonSolution parse_solution(const std::string& text) {
  Lines lines(text);

  int line = lines.line_number();
  auto head = lines.next();
  if (head.size() != 2 || head[0].text != "n")
    throw parse_error(line, 0, "expected 'n <count>'");
  int n = parse_int(head[1], line);
  if (n <= 0) throw parse_error(line, head[1].col, "count must be positive");

  std::optional<int> identity;
  auto peeked = lines.peek();
  if (!peeked.empty() && peeked[0].text == "identity") {
    line = lines.line_number();
    auto tokens = lines.next();
    if (tokens.size() != 2)
      throw parse_error(line, 0, "expected 'identity <index>'");
    identity = parse_entry(tokens[1], line, n);
  }

  line = lines.line_number();
  auto mul_head = lines.next();
  if (mul_head.size() != 1 || mul_head[0].text != "mul")
    throw parse_error(line, 0, "expected 'mul'");
  std::vector<int> table;
  for (int x = 0; x < n; ++x) {
    auto row = parse_row(lines, n);
    table.insert(table.end(), row.begin(), row.end());
  }

  line = lines.line_number();
  auto theta_head = lines.next();
  if (theta_head.size() != 1 || theta_head[0].text != "theta")
    throw parse_error(line, 0, "expected 'theta'");
  std::vector<int> theta;
  for (int x = 0; x < n; ++x) {
    auto row = parse_row(lines, n);
    theta.insert(theta.end(), row.begin(), row.end());
  }

  std::optional<std::vector<std::string>> declared_flags;
  if (!lines.done()) {
    line = lines.line_number();
    auto tokens = lines.next();
    if (tokens.empty() || tokens[0].text != "flags")
      throw parse_error(line, 0, "expected 'flags' or end of file");
    declared_flags.emplace();
    for (size_t i = 1; i < tokens.size(); ++i) {
      bool known = false;
      for (const char* name : kFlagNames) known |= tokens[i].text == name;
      if (!known)
        throw parse_error(line, tokens[i].col,
                          "unknown flag '" + tokens[i].text + "'");
      declared_flags->push_back(tokens[i].text);
    }
  }
  if (!lines.done())
    throw parse_error(lines.line_number(), 0, "unexpected trailing content");

  FiniteSemigroup s(n, std::move(table), identity);
  PentagonSolution sol(std::move(s), std::move(theta));

  if (declared_flags) {
    auto actual = classify(sol);
    uint32_t bits = actual.bits();
    std::vector<std::string> expected;
    for (int i = 0; i < 5; ++i)
      if (bits & (1u << i)) expected.push_back(kFlagNames[i]);
    if (*declared_flags != expected)
      throw std::invalid_argument(
          "declared flags do not match the recomputed classification (" +
          actual.to_string() + ")");
  }
  return sol;
}

std::string format_solution(const PentagonSolution& sol) {
  const auto& s = sol.semigroup();
  std::ostringstream out;
  out << "n " << s.size() << '\n';
  if (s.identity()) out << "identity " << *s.identity() << '\n';
  out << "mul\n";
  for (int x = 0; x < s.size(); ++x) {
    for (int y = 0; y < s.size(); ++y)
      out << (y ? " " : "") << s.mul(x, y);
    out << '\n';
  }
  out << "theta\n";
  for (int x = 0; x < s.size(); ++x) {
    for (int y = 0; y < s.size(); ++y)
      out << (y ? " " : "") << sol.theta(x, y);
    out << '\n';
  }
  out << "flags";
  uint32_t bits = classify(sol).bits();
  for (int i = 0; i < 5; ++i)
    if (bits & (1u << i)) out << ' ' << kFlagNames[i];
  out << '\n';
  return out.str();
}

ConstructionRequest parse_construction(const std::string& text) {
  Lines lines(text);
  ConstructionRequest req;

  int line = lines.line_number();
  auto head = lines.next();
  if (head.size() != 2 || head[0].text != "kind")
    throw parse_error(line, 0, "expected 'kind <name>'");
  req.kind = head[1].text;

  auto carrier = [&]() -> int {
    if (req.table) return req.table->size();
    if (req.set_size > 0) return req.set_size;
    throw parse_error(lines.line_number(), 0,
                      "a 'table' or 'n' block must come first");
  };

  while (!lines.done()) {
    line = lines.line_number();
    auto tokens = lines.next();
    const std::string& word = tokens[0].text;
    if (word == "table") {
      req.table = parse_cayley_block(lines);
    } else if (word == "n") {
      if (tokens.size() != 2)
        throw parse_error(line, 0, "expected 'n <count>'");
      req.set_size = parse_int(tokens[1], line);
      if (req.set_size <= 0)
        throw parse_error(line, tokens[1].col, "count must be positive");
    } else if (word == "K" || word == "R") {
      std::vector<int> subset;
      for (size_t i = 1; i < tokens.size(); ++i)
        subset.push_back(parse_entry(tokens[i], line, carrier()));
      (word == "K" ? req.subgroup : req.representatives) = std::move(subset);
    } else if (word == "e") {
      if (tokens.size() != 2)
        throw parse_error(line, 0, "expected 'e <index>'");
      req.constant = parse_entry(tokens[1], line, carrier());
    } else if (word == "mu" || word == "gamma" || word == "f" ||
               word == "g") {
      auto map = parse_map_block(lines, carrier());
      if (word == "mu")
        req.mu = map;
      else if (word == "gamma")
        req.gamma = map;
      else if (word == "f")
        req.f = map;
      else
        req.g = map;
    } else if (word == "theta") {
      if (tokens.size() != 2)
        throw parse_error(line, 0, "expected 'theta <idempotent>'");
      int e = parse_entry(tokens[1], line, carrier());
      req.theta_family.emplace(e, parse_map_block(lines, carrier()));
    } else {
      throw parse_error(line, tokens[0].col,
                        "unknown directive '" + word + "'");
    }
  }
  return req;
}

PentagonSolution build_construction(const ConstructionRequest& req) {
  auto need_table = [&]() -> const FiniteSemigroup& {
    if (!req.table)
      throw std::invalid_argument("construction needs a 'table' block");
    return *req.table;
  };
  auto need_map = [&](const std::optional<ElementMap>& m,
                      const char* name) -> const ElementMap& {
    if (!m)
      throw std::invalid_argument(std::string("construction needs a '") +
                                  name + "' block");
    return *m;
  };

  if (req.kind == "endomorphism")
    return from_endomorphism(need_table(), need_map(req.gamma, "gamma"));
  if (req.kind == "constant") {
    if (!req.constant)
      throw std::invalid_argument("construction needs an 'e' line");
    return constant_solution(need_table(), *req.constant);
  }
  if (req.kind == "variety") return variety_s_solution(need_table());
  if (req.kind == "clifford") return clifford_solution(need_table());
  if (req.kind == "militaru") {
    if (req.set_size <= 0)
      throw std::invalid_argument("construction needs an 'n' line");
    return militaru_solution(req.set_size, need_map(req.f, "f"),
                             need_map(req.g, "g"));
  }
  if (req.kind == "group")
    return group_solution({need_table(), req.subgroup, req.representatives,
                           need_map(req.mu, "mu")});
  if (req.kind == "monoid")
    return monoid_idempotent_solution(
        {need_table(), need_map(req.mu, "mu"), req.theta_family});
  throw std::invalid_argument("unknown construction kind '" + req.kind + "'");
}

}  // namespace pentasol
