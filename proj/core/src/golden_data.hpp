#pragma once

namespace nilbc::detail {
extern const char* const kBuiltinGolden;
}
