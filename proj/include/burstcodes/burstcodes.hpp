#pragma once

#include "burstcodes/balls.hpp"
#include "burstcodes/bounds.hpp"
#include "burstcodes/codes.hpp"
#include "burstcodes/decode_result.hpp"
#include "burstcodes/error.hpp"
#include "burstcodes/rll.hpp"
#include "burstcodes/svt.hpp"
#include "burstcodes/verify.hpp"
#include "burstcodes/vt.hpp"
#include "burstcodes/word.hpp"
