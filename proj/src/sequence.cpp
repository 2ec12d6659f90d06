#include "dold/sequence.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "dold/errors.hpp"

namespace dold {

std::string SequenceId::token() const {
  switch (family) {
    case SequenceFamily::first_unsigned:
      return "first_unsigned_k" + std::to_string(k);
    case SequenceFamily::first_signed:
      return "first_signed_k" + std::to_string(k);
    case SequenceFamily::second:
      return "second_k" + std::to_string(k);
    case SequenceFamily::external:
      return "external";
  }
  return "external";
}

std::string SequenceId::display() const {
  switch (family) {
    case SequenceFamily::first_unsigned:
      return "first kind (unsigned), k=" + std::to_string(k);
    case SequenceFamily::first_signed:
      return "first kind (signed), k=" + std::to_string(k);
    case SequenceFamily::second:
      return "second kind, k=" + std::to_string(k);
    case SequenceFamily::external:
      return "external";
  }
  return "external";
}

IntegerSequencePrefix::IntegerSequencePrefix(std::vector<Integer> values,
                                             std::string label, SequenceId id)
    : values_(std::move(values)), label_(std::move(label)), id_(id) {
  if (values_.empty()) {
    throw std::invalid_argument("IntegerSequencePrefix: empty prefix");
  }
}

const Integer& IntegerSequencePrefix::at(uint64_t n) const {
  if (n < 1 || n > values_.size()) {
    throw std::out_of_range("IntegerSequencePrefix: index " +
                            std::to_string(n) + " outside 1.." +
                            std::to_string(values_.size()));
  }
  return values_[n - 1];
}

IntegerSequencePrefix IntegerSequencePrefix::truncated(uint64_t n) const {
  if (n < 1 || n > values_.size()) {
    throw std::invalid_argument("truncated: bad length");
  }
  return IntegerSequencePrefix(
      std::vector<Integer>(values_.begin(), values_.begin() + n), label_, id_);
}

IntegerSequencePrefix ingest_bfile(std::istream& in,
                                   const std::string& fallback_label) {
  std::vector<Integer> values;
  std::string label = fallback_label;
  bool label_seen = false;
  std::string line;
  uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    // strip CR from files produced on other platforms
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;  // blank line
    if (first[0] == '#') {
      if (!label_seen) {
        std::string rest;
        std::getline(fields, rest);
        size_t start = rest.find_first_not_of(" \t");
        if (start != std::string::npos) {
          label = rest.substr(start);
          label_seen = true;
        }
      }
      continue;
    }
    std::string second;
    std::string extra;
    if (!(fields >> second) || (fields >> extra)) {
      throw IngestError("line " + std::to_string(line_no) +
                        ": expected 'index value'");
    }
    Integer index;
    Integer value;
    try {
      index = integer_from_decimal(first);
      value = integer_from_decimal(second);
    } catch (const IngestError&) {
      throw IngestError("line " + std::to_string(line_no) +
                        ": expected 'index value'");
    }
    if (index != Integer(static_cast<unsigned long>(values.size() + 1))) {
      throw IngestError("line " + std::to_string(line_no) +
                        ": index " + index.get_str() +
                        " breaks the consecutive-from-1 order");
    }
    if (value < 0) {
      throw IngestError("line " + std::to_string(line_no) +
                        ": negative value " + value.get_str() +
                        " (sequences must be non-negative)");
    }
    values.push_back(std::move(value));
  }
  if (values.empty()) throw IngestError("no sequence entries found");
  return IntegerSequencePrefix(std::move(values), label,
                               {SequenceFamily::external, 0});
}

IntegerSequencePrefix ingest_bfile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IngestError("cannot open " + path.string());
  return ingest_bfile(in, path.filename().string());
}

}  // namespace dold
