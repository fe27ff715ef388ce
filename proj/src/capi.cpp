#include "lrdip.h"
const char* lrdip_version(void) { return "0.1.0"; }
