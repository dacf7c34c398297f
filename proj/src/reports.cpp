#include "wavedecay/reports.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "wavedecay/errors.hpp"

namespace wavedecay {

void ReportSink::add_row(const std::string& kind, double T, double scale2,
                         const std::string& word, double value) {
    rows_.push_back({kind, T, scale2, word, value});
}

std::string ReportSink::csv() const {
    std::ostringstream os;
    os.precision(17);
    os << "kind,T,R_or_U,word,value\n";
    for (const auto& r : rows_)
        os << r.kind << ',' << r.T << ',' << r.scale2 << ',' << r.word << ',' << r.value
           << '\n';
    return os.str();
}

std::string ReportSink::json() const {
    nlohmann::json doc;
    doc["rows"] = nlohmann::json::array();
    for (const auto& r : rows_) {
        doc["rows"].push_back({{"kind", r.kind},
                               {"T", r.T},
                               {"R_or_U", r.scale2},
                               {"word", r.word},
                               {"value", r.value}});
    }
    return doc.dump(2) + "\n";
}

namespace {
void write_file(const std::string& path, const std::string& content) {
    std::ofstream os(path, std::ios::trunc);
    if (!os) throw Error(Errc::io_error, "cannot open for writing: " + path);
    os << content;
    if (!os) throw Error(Errc::io_error, "write failed: " + path);
}
}  // namespace

void ReportSink::write_csv(const std::string& path) const { write_file(path, csv()); }
void ReportSink::write_json(const std::string& path) const { write_file(path, json()); }

void write_two_column(const std::string& path,
                      const std::vector<std::pair<double, double>>& samples) {
    std::ostringstream os;
    os.precision(17);
    for (const auto& [x, y] : samples) os << x << ' ' << y << '\n';
    write_file(path, os.str());
}

}  // namespace wavedecay
