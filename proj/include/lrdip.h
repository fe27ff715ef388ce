#pragma once
#ifdef __cplusplus
extern "C" {
#endif
const char* lrdip_version(void);
#ifdef __cplusplus
}
#endif
