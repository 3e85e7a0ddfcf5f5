#include "supersplit/factor_cache.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace supersplit::arith {

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

}  // namespace

std::optional<FactorMap> parse_cache_line(std::string_view line) {
  line = trim(line);
  auto eq = line.find('=');
  if (eq == std::string_view::npos) return std::nullopt;
  FactorMap f;
  try {
    f.n = parse_bigint(trim(line.substr(0, eq)));
    if (f.n <= 0) return std::nullopt;
    std::string_view rhs = trim(line.substr(eq + 1));
    if (rhs != "1") {
      while (!rhs.empty()) {
        auto star = rhs.find('*');
        std::string_view term = trim(rhs.substr(0, star));
        rhs = star == std::string_view::npos ? std::string_view{} : rhs.substr(star + 1);
        auto caret = term.find('^');
        PrimePower pp;
        pp.prime = parse_bigint(trim(term.substr(0, caret)));
        pp.exponent = 1;
        if (caret != std::string_view::npos) {
          BigInt e = parse_bigint(trim(term.substr(caret + 1)));
          if (e < 1 || e > 1'000'000) return std::nullopt;
          pp.exponent = static_cast<unsigned>(e.get_ui());
        }
        if (!f.factors.empty() && f.factors.back().prime >= pp.prime) return std::nullopt;
        f.factors.push_back(pp);
      }
    }
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  if (f.product() != f.n) return std::nullopt;
  for (const auto& pp : f.factors)
    if (!is_probable_prime(pp.prime)) return std::nullopt;
  return f;
}

std::string format_cache_line(const FactorMap& f) {
  return f.n.get_str() + " = " + f.to_string();
}

FactorCache::FactorCache(std::filesystem::path path) : path_(std::move(path)) {
  std::ifstream in(*path_);
  if (!in) return;
  auto map = std::make_shared<Map>();
  std::string line;
  while (std::getline(in, line)) {
    auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    if (auto f = parse_cache_line(t))
      map->emplace(f->n, std::move(*f));
    else
      ++rejected_;
  }
  entries_ = std::move(map);
}

std::shared_ptr<const FactorCache::Map> FactorCache::snapshot() const {
  return std::atomic_load(&entries_);
}

std::optional<FactorMap> FactorCache::lookup(const BigInt& n) const {
  auto snap = snapshot();
  auto it = snap->find(n);
  if (it == snap->end()) return std::nullopt;
  return it->second;
}

bool FactorCache::store(const FactorMap& f) {
  if (!f.complete || f.cofactor) return false;
  std::lock_guard lock(writer_);
  auto current = snapshot();
  if (current->count(f.n)) return false;
  auto next = std::make_shared<Map>(*current);
  next->emplace(f.n, f);
  if (path_) {
    std::ofstream out(*path_, std::ios::app);
    if (!out) throw std::runtime_error("cannot append to factor cache " + path_->string());
    out << format_cache_line(f) << '\n';
  }
  std::atomic_store(&entries_, std::shared_ptr<const Map>(std::move(next)));
  return true;
}

std::size_t FactorCache::size() const { return snapshot()->size(); }

std::optional<std::filesystem::path> FactorCache::path_from_env() {
  const char* v = std::getenv("SUPERSPLIT_FACTOR_CACHE");
  if (!v || !*v) return std::nullopt;
  return std::filesystem::path(v);
}

}  // namespace supersplit::arith
