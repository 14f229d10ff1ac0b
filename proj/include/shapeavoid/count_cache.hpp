#pragma once

#include <sys/file.h>
#include <unistd.h>

#include <fcntl.h>

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "shapeavoid/bigint.hpp"
#include "shapeavoid/enumeration.hpp"
#include "shapeavoid/error.hpp"

namespace shapeavoid {

// Persistent store of exact counts keyed by (n, target, method). The file is
// one JSON document:
//
//   {"schema": 1, "records": [
//     {"n": 4, "kind": "shape", "target": [2,2], "method": "brute", "count": "20"}, ...]}
//
// Writers serialize on an advisory lock next to the file, merge their record
// into the latest contents and publish through a temp file + rename, so
// readers never observe a partial file.
class CountCache {
 public:
  static constexpr int kSchema = 1;

  explicit CountCache(std::filesystem::path path) : path_(std::move(path)) {}

  const std::filesystem::path& path() const noexcept { return path_; }

  std::vector<CountRecord> load() const {
    std::vector<CountRecord> out;
    std::ifstream in(path_);
    if (!in) return out;
    nlohmann::json doc;
    try {
      in >> doc;
    } catch (const nlohmann::json::exception& e) {
      throw validation_error("count cache " + path_.string() + " is not valid JSON: " + e.what());
    }
    if (doc.value("schema", 0) != kSchema)
      throw validation_error("count cache " + path_.string() + " has an unsupported schema");
    for (const auto& rec : doc.at("records")) out.push_back(from_json(rec));
    return out;
  }

  // A cached count, only if it was produced by the requested method.
  std::optional<BigInt> lookup(int n, const CountTarget& target, CountMethod method) const {
    for (const auto& rec : load())
      if (rec.n == n && rec.method == method && rec.target == target) return rec.count;
    return std::nullopt;
  }

  void store(const CountRecord& record) const {
    const std::string lock_path = path_.string() + ".lock";
    const int fd = ::open(lock_path.c_str(), O_CREAT | O_RDWR, 0644);
    if (fd < 0) throw std::runtime_error("cannot open cache lock " + lock_path);
    ::flock(fd, LOCK_EX);
    try {
      std::vector<CountRecord> records = load();
      bool replaced = false;
      for (auto& rec : records)
        if (rec.n == record.n && rec.method == record.method && rec.target == record.target) {
          rec = record;
          replaced = true;
        }
      if (!replaced) records.push_back(record);
      write_atomically(records);
    } catch (...) {
      ::flock(fd, LOCK_UN);
      ::close(fd);
      throw;
    }
    ::flock(fd, LOCK_UN);
    ::close(fd);
  }

  static nlohmann::json to_json(const CountRecord& rec) {
    nlohmann::json target = std::visit(
        [](const auto& t) -> nlohmann::json {
          using T = std::decay_t<decltype(t)>;
          if constexpr (std::is_same_v<T, Partition>)
            return t.parts();
          else
            return t.word();
        },
        rec.target);
    return {{"n", rec.n},
            {"kind", target_kind(rec.target)},
            {"target", target},
            {"method", to_string(rec.method)},
            {"count", to_decimal(rec.count)}};
  }

  static CountRecord from_json(const nlohmann::json& j) {
    try {
      CountRecord rec;
      rec.n = j.at("n").get<int>();
      const auto kind = j.at("kind").get<std::string>();
      const auto values = j.at("target").get<std::vector<int>>();
      if (kind == "shape")
        rec.target = Partition(values);
      else if (kind == "pattern")
        rec.target = Permutation(values);
      else
        throw validation_error("unknown target kind '" + kind + "'");
      rec.method = parse_count_method(j.at("method").get<std::string>());
      rec.count = parse_decimal(j.at("count").get<std::string>());
      return rec;
    } catch (const nlohmann::json::exception& e) {
      throw validation_error(std::string("malformed count cache record: ") + e.what());
    }
  }

 private:
  void write_atomically(const std::vector<CountRecord>& records) const {
    nlohmann::json doc{{"schema", kSchema}, {"records", nlohmann::json::array()}};
    for (const auto& rec : records) doc["records"].push_back(to_json(rec));

    static std::atomic<unsigned> counter{0};
    std::ostringstream tmp_name;
    tmp_name << path_.string() << ".tmp." << ::getpid() << '.'
             << std::hash<std::thread::id>{}(std::this_thread::get_id()) << '.' << counter++;
    const std::string tmp = tmp_name.str();
    {
      std::ofstream out(tmp, std::ios::trunc);
      if (!out) throw std::runtime_error("cannot write " + tmp);
      out << doc.dump(2) << '\n';
      out.flush();
      if (!out) throw std::runtime_error("short write to " + tmp);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path_, ec);
    if (ec) {
      std::filesystem::remove(tmp);
      throw std::runtime_error("cannot publish " + path_.string() + ": " + ec.message());
    }
  }

  std::filesystem::path path_;
};

}  // namespace shapeavoid
