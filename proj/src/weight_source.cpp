#include "mkp/weight_source.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace mkp {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

bool parse_double(const std::string& s, double& out) {
  if (s.empty()) return false;
  std::size_t pos = 0;
  try {
    out = std::stod(s, &pos);
  } catch (const std::exception&) {
    return false;
  }
  return pos == s.size();
}

// "k1=v1,k2=v2" into a map; every key must be in `allowed`.
std::map<std::string, std::string> parse_args(std::string_view head, std::string_view body,
                                              std::initializer_list<std::string_view> allowed) {
  std::map<std::string, std::string> out;
  std::stringstream ss{std::string(body)};
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("weight source '" + std::string(head) + "': expected key=value, got '" + item + "'");
    const std::string key = trim(item.substr(0, eq));
    bool ok = false;
    for (auto a : allowed) ok = ok || key == a;
    if (!ok) throw std::invalid_argument("weight source '" + std::string(head) + "': unknown key '" + key + "'");
    out[key] = trim(item.substr(eq + 1));
  }
  for (auto a : allowed)
    if (!out.count(std::string(a)))
      throw std::invalid_argument("weight source '" + std::string(head) + "': missing key '" + std::string(a) + "'");
  return out;
}

double number(const std::map<std::string, std::string>& args, const std::string& key) {
  double v = 0.0;
  if (!parse_double(args.at(key), v)) throw std::invalid_argument("weight source: '" + key + "' is not a number");
  return v;
}

}  // namespace

std::string WeightSource::describe() const {
  std::ostringstream os;
  os.precision(17);
  switch (kind) {
    case Kind::ones: os << "ones"; break;
    case Kind::kernel: os << "kernel:t0=" << t0; break;
    case Kind::eigkernel: os << "eigkernel:c=" << c << ",t0=" << t0; break;
    case Kind::secondkind: os << "secondkind:t0=" << t0; break;
    case Kind::file: os << "file:" << path; break;
    case Kind::random: os << "random:seed=" << seed; break;
  }
  return os.str();
}

WeightSource parse_weight_source(std::string_view text) {
  const std::string t = trim(text);
  const auto colon = t.find(':');
  const std::string head = colon == std::string::npos ? t : t.substr(0, colon);
  const std::string body = colon == std::string::npos ? std::string() : t.substr(colon + 1);
  WeightSource src;
  if (head == "ones") {
    if (!body.empty()) throw std::invalid_argument("weight source 'ones' takes no arguments");
    src.kind = WeightSource::Kind::ones;
  } else if (head == "kernel") {
    src.kind = WeightSource::Kind::kernel;
    src.t0 = number(parse_args(head, body, {"t0"}), "t0");
  } else if (head == "eigkernel") {
    src.kind = WeightSource::Kind::eigkernel;
    const auto args = parse_args(head, body, {"c", "t0"});
    src.c = number(args, "c");
    src.t0 = number(args, "t0");
  } else if (head == "secondkind") {
    src.kind = WeightSource::Kind::secondkind;
    src.t0 = number(parse_args(head, body, {"t0"}), "t0");
  } else if (head == "file") {
    if (body.empty()) throw std::invalid_argument("weight source 'file' needs a path");
    src.kind = WeightSource::Kind::file;
    src.path = body;
  } else if (head == "random") {
    src.kind = WeightSource::Kind::random;
    const std::string s = parse_args(head, body, {"seed"}).at("seed");
    const auto res = std::from_chars(s.data(), s.data() + s.size(), src.seed);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
      throw std::invalid_argument("weight source 'random': seed must be a non-negative integer");
  } else {
    throw std::invalid_argument("unknown weight source '" + head +
                                "' (expected ones, kernel, eigkernel, secondkind, file or random)");
  }
  return src;
}

std::vector<double> read_weight_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open weight file '" + path + "'");
  std::vector<double> out;
  std::string line;
  bool first_line = true;
  while (std::getline(in, line)) {
    for (char& ch : line)
      if (ch == ',' || ch == ';' || ch == '\t') ch = ' ';
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    for (std::string tok; ls >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    double probe = 0.0;
    if (first_line && !parse_double(tokens.front(), probe)) {
      first_line = false;
      continue;  // header
    }
    first_line = false;
    for (const auto& tok : tokens) {
      double v = 0.0;
      const std::size_t index = out.size();
      if (!parse_double(tok, v))
        throw std::invalid_argument("weight file '" + path + "': entry c_" + std::to_string(index) + " ('" + tok +
                                    "') is not a number");
      if (!(v > 0.0))
        throw std::invalid_argument("weight file '" + path + "': entry c_" + std::to_string(index) + " = " + tok +
                                    " is not strictly positive");
      out.push_back(v);
    }
  }
  if (out.empty()) throw std::invalid_argument("weight file '" + path + "' holds no entries");
  return out;
}

std::vector<double> random_weights(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(0.5, 2.0);
  std::vector<double> out(count);
  for (double& v : out) v = dist(rng);
  return out;
}

WeightSequence materialize_weights(const WeightSource& src, const RecurrenceCoefficients& rc, std::size_t count) {
  switch (src.kind) {
    case WeightSource::Kind::ones:
      return WeightSequence(std::vector<double>(count, 1.0));
    case WeightSource::Kind::kernel:
      return generate_weights(rc, PlainKernel{src.t0}, count);
    case WeightSource::Kind::eigkernel:
      return generate_weights(rc, EigScaledKernel{src.c, src.t0}, count);
    case WeightSource::Kind::secondkind:
      return generate_weights(rc, SecondKind{src.t0}, count);
    case WeightSource::Kind::file:
      return generate_weights(rc, ExplicitWeights{WeightSequence(read_weight_file(src.path))}, count);
    case WeightSource::Kind::random:
      return WeightSequence(random_weights(src.seed, count));
  }
  throw std::logic_error("unreachable weight source kind");
}

}  // namespace mkp
