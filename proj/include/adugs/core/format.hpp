#pragma once

#include <string>

namespace adugs {

/// %.9g — 9 significant digits, locale-independent ('.' decimal point).
std::string fmt_g9(double v);

/// %.9f — fixed 9 decimals, used by the TUM trajectory writer.
std::string fmt_f9(double v);

/// Round-trips v through fmt_g9. Idempotent: a quantized value reprints to
/// the same text, so files built from quantized values reload bit-exactly.
double quantize_g9(double v);

/// Round-trips v through fmt_f9.
double quantize_f9(double v);

}  // namespace adugs
