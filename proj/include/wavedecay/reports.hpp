#pragma once

#include <string>
#include <utility>
#include <vector>

namespace wavedecay {

// Shared CSV/JSON report channel for the measurement and checker modules.
// Rows are `kind,T,R_or_U,word,value`; fits additionally emit plot-ready
// two-column text files.
class ReportSink {
  public:
    void add_row(const std::string& kind, double T, double scale2, const std::string& word,
                 double value);

    std::string csv() const;
    std::string json() const;  // {"rows":[{kind,T,R_or_U,word,value},...]}

    void write_csv(const std::string& path) const;
    void write_json(const std::string& path) const;

    bool empty() const { return rows_.empty(); }

  private:
    struct Row {
        std::string kind;
        double T;
        double scale2;
        std::string word;
        double value;
    };
    std::vector<Row> rows_;
};

// two-column plot-ready text (scale value)
void write_two_column(const std::string& path,
                      const std::vector<std::pair<double, double>>& samples);

}  // namespace wavedecay
