#pragma once

#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace ualg {

// Machine-parseable key=value report; field order is insertion order so
// identical inputs give byte-identical output.
class Report {
 public:
  void add(const std::string& key, const std::string& value) { fields_.emplace_back(key, value); }
  void add(const std::string& key, const char* value) { fields_.emplace_back(key, value); }
  void add(const std::string& key, bool value) { add(key, value ? std::string("true") : std::string("false")); }
  void add(const std::string& key, long long value) { add(key, std::to_string(value)); }
  void add(const std::string& key, int value) { add(key, (long long)value); }
  template <typename T>
  void add_list(const std::string& key, const std::vector<T>& values) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < values.size(); ++i) {
      if (i) os << ",";
      os << values[i];
    }
    os << "]";
    add(key, os.str());
  }
  void comment(const std::string& text) { fields_.emplace_back("#", text); }

  std::string value_of(const std::string& key) const {
    for (const auto& [k, v] : fields_)
      if (k == key) return v;
    return "";
  }

  std::string to_string() const {
    std::ostringstream os;
    for (const auto& [k, v] : fields_) {
      if (k == "#")
        os << "# " << v << "\n";
      else
        os << k << "=" << v << "\n";
    }
    return os.str();
  }

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

}  // namespace ualg
