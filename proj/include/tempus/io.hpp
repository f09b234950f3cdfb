#pragma once

#include <istream>

#include "tempus/temporal.hpp"
#include "tempus/uncertainty.hpp"

// File ingestion shared by the CLI and tests.

namespace tempus::io {

// Delimited text, one `omega re_S im_S` row per line (whitespace or comma
// separated, '#' comments), omega strictly increasing. The response
// interpolates linearly in the complex plane; its declared domain is the
// tabulated interval.
temporal::SpectralResponse load_spectral_response(std::istream& in);

// Wavepacket grid format:
//   header: nx ny nz nw axis_kind        (axis_kind: time | energy)
//   one line of coordinates per axis (x, y, z, then the spectral axis)
//   flattened row-major samples (w fastest), whitespace/newline separated
// '#' comments allowed anywhere.
uncertainty::WavepacketGrid load_wavepacket_grid(std::istream& in);

}  // namespace tempus::io
