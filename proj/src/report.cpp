#include "omega4/report.hpp"

#include <json.hpp>

namespace omega4 {

void Report::set(const std::string& key, const std::string& value) {
  kv_[key] = value;
}
void Report::set(const std::string& key, const char* value) {
  kv_[key] = value;
}
void Report::set(const std::string& key, int value) {
  kv_[key] = std::to_string(value);
}
void Report::set(const std::string& key, uint64_t value) {
  kv_[key] = std::to_string(value);
}
void Report::set(const std::string& key, bool value) {
  kv_[key] = value ? "true" : "false";
}

std::string Report::to_text() const {
  std::string out;
  for (const auto& [k, v] : kv_) out += k + "=" + v + "\n";
  return out;
}

std::string Report::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : kv_) j[k] = v;
  return j.dump(2) + "\n";
}

std::string padded_index(int i, int count) {
  int width = 1;
  for (int c = count - 1; c >= 10; c /= 10) ++width;
  std::string s = std::to_string(i);
  while (static_cast<int>(s.size()) < width) s = "0" + s;
  return s;
}

}  // namespace omega4
