#include "tempus/io.hpp"

#include <algorithm>
#include <complex>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace tempus::io {

namespace {

// Strip comments, split on whitespace/commas, keep a running line count.
class TokenReader {
 public:
  explicit TokenReader(std::istream& in) : in_(in) {}

  bool next(std::string& token) {
    while (true) {
      if (pos_ < tokens_.size()) {
        token = tokens_[pos_++];
        return true;
      }
      std::string line;
      if (!std::getline(in_, line)) return false;
      ++lineno_;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::replace(line.begin(), line.end(), ',', ' ');
      tokens_.clear();
      pos_ = 0;
      std::istringstream ls(line);
      std::string t;
      while (ls >> t) tokens_.push_back(t);
    }
  }

  double number(const char* what) {
    std::string t;
    if (!next(t)) {
      throw ParseError(lineno_, std::string("unexpected end of file, wanted ") + what);
    }
    try {
      std::size_t pos = 0;
      const double v = std::stod(t, &pos);
      if (pos != t.size()) throw std::invalid_argument(t);
      return v;
    } catch (const std::exception&) {
      throw ParseError(lineno_, std::string("malformed ") + what + " '" + t + "'");
    }
  }

  std::size_t line() const { return lineno_; }

 private:
  std::istream& in_;
  std::vector<std::string> tokens_;
  std::size_t pos_ = 0;
  std::size_t lineno_ = 0;
};

}  // namespace

temporal::SpectralResponse load_spectral_response(std::istream& in) {
  TokenReader reader(in);
  auto omegas = std::make_shared<std::vector<double>>();
  auto values = std::make_shared<std::vector<std::complex<double>>>();
  std::string first;
  while (true) {
    if (!reader.next(first)) break;
    double w;
    try {
      std::size_t pos = 0;
      w = std::stod(first, &pos);
      if (pos != first.size()) throw std::invalid_argument(first);
    } catch (const std::exception&) {
      throw ParseError(reader.line(), "malformed omega '" + first + "'");
    }
    const double re = reader.number("Re S");
    const double im = reader.number("Im S");
    if (!omegas->empty() && w <= omegas->back()) {
      throw ParseError(reader.line(), "omega must be strictly increasing");
    }
    omegas->push_back(w);
    values->emplace_back(re, im);
  }
  if (omegas->size() < 2) {
    throw ParseError(reader.line(), "need at least two tabulated rows");
  }

  temporal::SpectralResponse resp;
  resp.omega_min = omegas->front();
  resp.omega_max = omegas->back();
  resp.uses_k = false;
  resp.eval = [omegas, values](double w, double) -> std::complex<double> {
    const auto& ws = *omegas;
    auto it = std::upper_bound(ws.begin(), ws.end(), w);
    if (it == ws.begin()) return values->front();
    if (it == ws.end()) return values->back();
    const std::size_t hi = static_cast<std::size_t>(it - ws.begin());
    const std::size_t lo = hi - 1;
    const double t = (w - ws[lo]) / (ws[hi] - ws[lo]);
    return (*values)[lo] + t * ((*values)[hi] - (*values)[lo]);
  };
  return resp;
}

uncertainty::WavepacketGrid load_wavepacket_grid(std::istream& in) {
  TokenReader reader(in);
  uncertainty::WavepacketGrid grid;

  std::size_t sizes[4];
  const char* names[4] = {"nx", "ny", "nz", "nw"};
  for (int i = 0; i < 4; ++i) {
    const double v = reader.number(names[i]);
    if (v < 1.0 || v != std::floor(v)) {
      throw ParseError(reader.line(), std::string(names[i]) +
                                          " must be a positive integer");
    }
    sizes[i] = static_cast<std::size_t>(v);
  }
  std::string kind;
  if (!reader.next(kind)) {
    throw ParseError(reader.line(), "missing axis kind (time|energy)");
  }
  if (kind == "time") {
    grid.axis = uncertainty::SpectralAxis::Time;
  } else if (kind == "energy") {
    grid.axis = uncertainty::SpectralAxis::Energy;
  } else {
    throw ParseError(reader.line(), "axis kind must be time or energy");
  }

  std::vector<double>* axes[4] = {&grid.x, &grid.y, &grid.z, &grid.w};
  for (int i = 0; i < 4; ++i) {
    axes[i]->resize(sizes[i]);
    for (std::size_t j = 0; j < sizes[i]; ++j) {
      (*axes[i])[j] = reader.number("axis coordinate");
    }
    for (std::size_t j = 1; j < sizes[i]; ++j) {
      if ((*axes[i])[j] <= (*axes[i])[j - 1]) {
        throw ParseError(reader.line(), "axis coordinates must be strictly increasing");
      }
    }
  }

  const std::size_t total = sizes[0] * sizes[1] * sizes[2] * sizes[3];
  grid.samples.resize(total);
  for (std::size_t i = 0; i < total; ++i) {
    grid.samples[i] = reader.number("sample");
  }
  std::string extra;
  if (reader.next(extra)) {
    throw ParseError(reader.line(), "trailing data after the sample block");
  }
  grid.validate();
  return grid;
}

}  // namespace tempus::io
