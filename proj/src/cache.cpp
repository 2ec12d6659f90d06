#include "dold/cache.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "dold/errors.hpp"

namespace dold {

uint64_t fnv1a64(std::string_view data) {
  uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return hash;
}

namespace {

constexpr char kMagic[] = "dold-cache 1";

std::string hex64(uint64_t v) {
  std::ostringstream out;
  out << std::hex << v;
  return out.str();
}

SequenceId id_for(StirlingKind kind, uint64_t k) {
  switch (kind) {
    case StirlingKind::first_unsigned:
      return {SequenceFamily::first_unsigned, k};
    case StirlingKind::first_signed:
      return {SequenceFamily::first_signed, k};
    case StirlingKind::second:
      return {SequenceFamily::second, k};
  }
  return {SequenceFamily::external, 0};
}

std::string payload_of(std::span<const Integer> values) {
  std::string payload;
  for (const Integer& v : values) {
    payload += v.get_str();
    payload += '\n';
  }
  return payload;
}

}  // namespace

SequenceCache::SequenceCache(std::filesystem::path dir)
    : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::optional<IntegerSequencePrefix> SequenceCache::load(StirlingKind kind,
                                                         uint64_t k,
                                                         uint64_t n) const {
  SequenceId id = id_for(kind, k);
  std::string stem = id.token() + "_n";
  uint64_t best_horizon = 0;
  std::filesystem::path best_path;
  for (const auto& entry : std::filesystem::directory_iterator(dir_)) {
    std::string name = entry.path().filename().string();
    if (name.rfind(stem, 0) != 0 || entry.path().extension() != ".txt") {
      continue;
    }
    uint64_t horizon = 0;
    try {
      horizon = std::stoull(name.substr(stem.size()));
    } catch (...) {
      continue;
    }
    if (horizon < n) continue;
    if (best_horizon == 0 || horizon < best_horizon) {
      best_horizon = horizon;
      best_path = entry.path();
    }
  }
  if (best_horizon == 0) return std::nullopt;

  std::ifstream in(best_path);
  if (!in) return std::nullopt;
  std::string line;
  if (!std::getline(in, line) || line != kMagic) return std::nullopt;
  std::string token;
  uint64_t horizon = 0;
  std::string digest;
  {
    if (!std::getline(in, line)) return std::nullopt;
    std::istringstream header(line);
    std::string key1, key2, key3;
    if (!(header >> key1 >> token >> key2 >> horizon >> key3 >> digest) ||
        key1 != "id" || key2 != "horizon" || key3 != "digest") {
      return std::nullopt;
    }
  }
  if (token != id.token() || horizon != best_horizon) return std::nullopt;
  std::string payload((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
  if (hex64(fnv1a64(payload)) != digest) {
    std::cerr << "cache: digest mismatch, ignoring " << best_path << "\n";
    return std::nullopt;
  }
  std::vector<Integer> values;
  values.reserve(horizon);
  std::istringstream body(payload);
  while (std::getline(body, line)) {
    if (line.empty()) continue;
    try {
      values.push_back(integer_from_decimal(line));
    } catch (const IngestError&) {
      return std::nullopt;
    }
  }
  if (values.size() != horizon) return std::nullopt;
  values.resize(n);
  // label matches what the generator would produce
  IntegerSequencePrefix generated_shape = sequence_prefix(kind, k, 1);
  return IntegerSequencePrefix(std::move(values), generated_shape.label(), id);
}

void SequenceCache::store(const IntegerSequencePrefix& prefix) const {
  if (prefix.id().family == SequenceFamily::external) {
    throw std::invalid_argument("SequenceCache: only family prefixes persist");
  }
  std::filesystem::path path =
      dir_ / (prefix.id().token() + "_n" + std::to_string(prefix.size()) +
              ".txt");
  if (std::filesystem::exists(path)) return;
  std::string payload = payload_of(prefix.values());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    out << kMagic << "\n";
    out << "id " << prefix.id().token() << " horizon " << prefix.size()
        << " digest " << hex64(fnv1a64(payload)) << "\n";
    out << payload;
  }
  std::filesystem::rename(tmp, path);
}

const IntegerSequencePrefix& PrefixProvider::get(StirlingKind kind, uint64_t k,
                                                 uint64_t n) {
  auto key = std::make_tuple(static_cast<int>(kind), k, n);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  if (disk_) {
    if (auto cached = disk_->load(kind, k, n)) {
      return memo_.emplace(key, std::move(*cached)).first->second;
    }
  }
  IntegerSequencePrefix fresh = sequence_prefix(kind, k, n);
  if (disk_) disk_->store(fresh);
  return memo_.emplace(key, std::move(fresh)).first->second;
}

}  // namespace dold
