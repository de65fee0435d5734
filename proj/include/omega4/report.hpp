#pragma once

#include <map>
#include <string>

namespace omega4 {

/// Accumulates key=value lines; rendering sorts by key so output is
/// byte-stable across runs. The JSON mode carries the same strings.
class Report {
 public:
  void set(const std::string& key, const std::string& value);
  void set(const std::string& key, const char* value);
  void set(const std::string& key, int value);
  void set(const std::string& key, uint64_t value);
  void set(const std::string& key, bool value);

  std::string to_text() const;
  std::string to_json() const;

 private:
  std::map<std::string, std::string> kv_;
};

/// Zero-padded index so lexicographic key order matches numeric order.
std::string padded_index(int i, int count);

}  // namespace omega4
