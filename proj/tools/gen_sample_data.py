#!/usr/bin/env python3
#
# Copyright 2026 The pmuspill-sim Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#   https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Writes the synthetic sample inputs under data/.

The files are shaped like a pmu-tools event list and a uops.info instruction
database but are generated, not copied. Output is a pure function of SEED.
"""

import argparse
import json
import pathlib
import random
from xml.sax.saxutils import quoteattr

SEED = 20220718

# (name, code, umask, cmask, inv, edge, description)
BASE_EVENTS = [
    ("INST_RETIRED.ANY", 0x00, 0x01, 0, 0, 0, "Instructions retired from execution"),
    ("CPU_CLK_UNHALTED.THREAD", 0x00, 0x02, 0, 0, 0, "Core cycles when the thread is not in halt state"),
    ("CPU_CLK_UNHALTED.REF_TSC", 0x00, 0x03, 0, 0, 0, "Reference cycles when the core is not in halt state"),
    ("LD_BLOCKS.STORE_FORWARD", 0x03, 0x02, 0, 0, 0, "Loads blocked by overlapping with store buffer"),
    ("LD_BLOCKS.NO_SR", 0x03, 0x08, 0, 0, 0, "Split loads blocked due to resource not available"),
    ("LD_BLOCKS_PARTIAL.ADDRESS_ALIAS", 0x07, 0x01, 0, 0, 0, "False dependencies due to partial address aliasing"),
    ("DTLB_LOAD_MISSES.MISS_CAUSES_A_WALK", 0x08, 0x01, 0, 0, 0, "Load misses in all DTLB levels that cause page walks"),
    ("DTLB_LOAD_MISSES.WALK_COMPLETED", 0x08, 0x0E, 0, 0, 0, "Load miss page walks completed (all sizes)"),
    ("DTLB_LOAD_MISSES.WALK_PENDING", 0x08, 0x10, 0, 0, 0, "Cycles with a pending load page walk"),
    ("DTLB_LOAD_MISSES.WALK_ACTIVE", 0x08, 0x10, 1, 0, 0, "Cycles when at least one load page walk is active"),
    ("DTLB_LOAD_MISSES.STLB_HIT", 0x08, 0x20, 0, 0, 0, "Loads that miss the DTLB and hit the STLB"),
    ("INT_MISC.RECOVERY_CYCLES", 0x0D, 0x01, 0, 0, 0, "Core cycles the allocator was stalled due to recovery from earlier clear event for this thread"),
    ("INT_MISC.CLEAR_RESTEER_CYCLES", 0x0D, 0x80, 0, 0, 0, "Cycles the issue-stage is waiting for front-end to fetch from resteered path"),
    ("UOPS_ISSUED.ANY", 0x0E, 0x01, 0, 0, 0, "Uops issued by the RAT to the RS"),
    ("UOPS_ISSUED.STALL_CYCLES", 0x0E, 0x01, 1, 1, 0, "Cycles when the RAT does not issue uops"),
    ("UOPS_ISSUED.VECTOR_WIDTH_MISMATCH", 0x0E, 0x02, 0, 0, 0, "Blend uops inserted for width mismatch"),
    ("UOPS_ISSUED.SLOW_LEA", 0x0E, 0x20, 0, 0, 0, "Slow LEA uops issued"),
    ("ARITH.DIVIDER_ACTIVE", 0x14, 0x01, 1, 0, 0, "Cycles when the divider is busy"),
    ("L2_RQSTS.DEMAND_DATA_RD_MISS", 0x24, 0x21, 0, 0, 0, "Demand data read requests that miss L2"),
    ("L2_RQSTS.RFO_MISS", 0x24, 0x22, 0, 0, 0, "RFO requests that miss L2"),
    ("L2_RQSTS.CODE_RD_MISS", 0x24, 0x24, 0, 0, 0, "L2 cache misses when fetching instructions"),
    ("L2_RQSTS.ALL_DEMAND_MISS", 0x24, 0x27, 0, 0, 0, "Demand requests that miss L2"),
    ("L2_RQSTS.PF_MISS", 0x24, 0x38, 0, 0, 0, "Prefetch requests that miss L2"),
    ("L2_RQSTS.MISS", 0x24, 0x3F, 0, 0, 0, "All requests that miss L2"),
    ("L2_RQSTS.DEMAND_DATA_RD_HIT", 0x24, 0x41, 0, 0, 0, "Demand data read requests that hit L2"),
    ("L2_RQSTS.RFO_HIT", 0x24, 0x42, 0, 0, 0, "RFO requests that hit L2"),
    ("L2_RQSTS.CODE_RD_HIT", 0x24, 0x44, 0, 0, 0, "L2 hits when fetching instructions"),
    ("L2_RQSTS.PF_HIT", 0x24, 0xD8, 0, 0, 0, "Prefetches that hit L2"),
    ("L2_RQSTS.ALL_DEMAND_DATA_RD", 0x24, 0xE1, 0, 0, 0, "Demand data read requests to L2"),
    ("L2_RQSTS.ALL_RFO", 0x24, 0xE2, 0, 0, 0, "RFO requests to L2"),
    ("L2_RQSTS.ALL_CODE_RD", 0x24, 0xE4, 0, 0, 0, "L2 code requests"),
    ("L2_RQSTS.ALL_DEMAND_REFERENCES", 0x24, 0xE7, 0, 0, 0, "Demand requests to L2"),
    ("L2_RQSTS.ALL_PF", 0x24, 0xF8, 0, 0, 0, "Requests from the L1/L2/L3 hardware prefetchers"),
    ("L2_RQSTS.REFERENCES", 0x24, 0xFF, 0, 0, 0, "All L2 requests"),
    ("LONGEST_LAT_CACHE.MISS", 0x2E, 0x41, 0, 0, 0, "Core-originated cacheable demand requests missed L3"),
    ("LONGEST_LAT_CACHE.REFERENCE", 0x2E, 0x4F, 0, 0, 0, "Core-originated cacheable demand requests that refer to L3"),
    ("CPU_CLK_UNHALTED.THREAD_P", 0x3C, 0x00, 0, 0, 0, "Thread cycles when thread is not in halt state"),
    ("CPU_CLK_UNHALTED.RING0_TRANS", 0x3C, 0x00, 1, 0, 1, "Counts when there is a transition from ring 1, 2 or 3 to ring 0"),
    ("CPU_CLK_THREAD_UNHALTED.REF_XCLK", 0x3C, 0x01, 0, 0, 0, "Core crystal clock cycles when the thread is unhalted"),
    ("CPU_CLK_THREAD_UNHALTED.ONE_THREAD_ACTIVE", 0x3C, 0x02, 0, 0, 0, "Core crystal clock cycles when this thread is unhalted and the other is halted"),
    ("L1D_PEND_MISS.PENDING", 0x48, 0x01, 0, 0, 0, "L1D miss outstanding duration in cycles"),
    ("L1D_PEND_MISS.PENDING_CYCLES", 0x48, 0x01, 1, 0, 0, "Cycles with L1D load misses outstanding"),
    ("L1D_PEND_MISS.FB_FULL", 0x48, 0x02, 0, 0, 0, "Cycles a demand request was blocked due to fill buffer unavailability"),
    ("DTLB_STORE_MISSES.MISS_CAUSES_A_WALK", 0x49, 0x01, 0, 0, 0, "Store misses in all DTLB levels that cause page walks"),
    ("DTLB_STORE_MISSES.WALK_COMPLETED", 0x49, 0x0E, 0, 0, 0, "Store miss page walks completed (all sizes)"),
    ("DTLB_STORE_MISSES.WALK_PENDING", 0x49, 0x10, 0, 0, 0, "Cycles with a pending store page walk"),
    ("DTLB_STORE_MISSES.WALK_ACTIVE", 0x49, 0x10, 1, 0, 0, "Cycles when at least one store page walk is active"),
    ("DTLB_STORE_MISSES.STLB_HIT", 0x49, 0x20, 0, 0, 0, "Stores that miss the DTLB and hit the STLB"),
    ("LOAD_HIT_PRE.SW_PF", 0x4C, 0x01, 0, 0, 0, "Demand load dispatches that hit L1D fill buffer allocated for software prefetch"),
    ("EPT.WALK_PENDING", 0x4F, 0x10, 0, 0, 0, "Cycles with a pending EPT page walk"),
    ("L1D.REPLACEMENT", 0x51, 0x01, 0, 0, 0, "L1D data line replacements"),
    ("TX_MEM.ABORT_CONFLICT", 0x54, 0x01, 0, 0, 0, "Transactional aborts due to a data conflict"),
    ("TX_MEM.ABORT_CAPACITY", 0x54, 0x02, 0, 0, 0, "Transactional aborts due to capacity"),
    ("TX_MEM.HLE_ELISION_BUFFER_FULL", 0x54, 0x40, 0, 0, 0, "HLE could not elide a lock because the buffer was full"),
    ("PARTIAL_RAT_STALLS.SCOREBOARD", 0x59, 0x01, 0, 0, 0, "Cycles where the pipeline is stalled due to serializing operations"),
    ("TX_EXEC.MISC1", 0x5D, 0x01, 0, 0, 0, "Unfriendly events in a transaction"),
    ("TX_EXEC.MISC2", 0x5D, 0x02, 0, 0, 0, "Aborts caused by an unfriendly instruction"),
    ("RS_EVENTS.EMPTY_CYCLES", 0x5E, 0x01, 0, 0, 0, "Cycles when the Reservation Station (RS) is empty for the thread"),
    ("RS_EVENTS.EMPTY_END", 0x5E, 0x01, 1, 1, 1, "Counts end of periods where the RS was empty"),
    ("OFFCORE_REQUESTS_OUTSTANDING.DEMAND_DATA_RD", 0x60, 0x01, 0, 0, 0, "Outstanding demand data read transactions in the super queue every cycle"),
    ("OFFCORE_REQUESTS_OUTSTANDING.CYCLES_WITH_DEMAND_DATA_RD", 0x60, 0x01, 1, 0, 0, "Cycles with an outstanding demand data read"),
    ("OFFCORE_REQUESTS_OUTSTANDING.DEMAND_CODE_RD", 0x60, 0x02, 0, 0, 0, "Outstanding code read transactions every cycle"),
    ("OFFCORE_REQUESTS_OUTSTANDING.CYCLES_WITH_DEMAND_CODE_RD", 0x60, 0x02, 1, 0, 0, "Cycles with an outstanding code read"),
    ("OFFCORE_REQUESTS_OUTSTANDING.DEMAND_RFO", 0x60, 0x04, 0, 0, 0, "Outstanding RFO transactions every cycle"),
    ("OFFCORE_REQUESTS_OUTSTANDING.CYCLES_WITH_DEMAND_RFO", 0x60, 0x04, 1, 0, 0, "Cycles with an outstanding RFO"),
    ("OFFCORE_REQUESTS_OUTSTANDING.ALL_DATA_RD", 0x60, 0x08, 0, 0, 0, "Outstanding cacheable data reads every cycle"),
    ("OFFCORE_REQUESTS_OUTSTANDING.CYCLES_WITH_DATA_RD", 0x60, 0x08, 1, 0, 0, "Cycles with an outstanding cacheable data read"),
    ("OFFCORE_REQUESTS_OUTSTANDING.L3_MISS_DEMAND_DATA_RD", 0x60, 0x10, 0, 0, 0, "Outstanding demand data reads that missed L3"),
    ("LOCK_CYCLES.CACHE_LOCK_DURATION", 0x63, 0x02, 0, 0, 0, "Cycles when L1D is locked"),
    ("IDQ.MITE_UOPS", 0x79, 0x04, 0, 0, 0, "Uops delivered to the IDQ from the MITE path"),
    ("IDQ.MITE_CYCLES", 0x79, 0x04, 1, 0, 0, "Cycles when uops are being delivered from the MITE path"),
    ("IDQ.DSB_UOPS", 0x79, 0x08, 0, 0, 0, "Uops delivered to the IDQ from the decoded stream buffer"),
    ("IDQ.DSB_CYCLES", 0x79, 0x08, 1, 0, 0, "Cycles when uops are being delivered from the DSB"),
    ("IDQ.MS_DSB_CYCLES", 0x79, 0x10, 1, 0, 0, "Cycles when uops initiated by the DSB are delivered while the MS is busy"),
    ("IDQ.MS_MITE_UOPS", 0x79, 0x20, 0, 0, 0, "Uops initiated by MITE and delivered to IDQ while Microcode Sequencer (MS) is busy"),
    ("IDQ.ALL_DSB_CYCLES_4_UOPS", 0x79, 0x18, 4, 0, 0, "Cycles the DSB delivers 4 uops"),
    ("IDQ.ALL_DSB_CYCLES_ANY_UOPS", 0x79, 0x18, 1, 0, 0, "Cycles the DSB delivers at least one uop"),
    ("IDQ.ALL_MITE_CYCLES_4_UOPS", 0x79, 0x24, 4, 0, 0, "Cycles MITE delivers 4 uops"),
    ("IDQ.ALL_MITE_CYCLES_ANY_UOPS", 0x79, 0x24, 1, 0, 0, "Cycles MITE delivers at least one uop"),
    ("IDQ.MS_UOPS", 0x79, 0x30, 0, 0, 0, "Uops delivered to the IDQ while the MS is busy"),
    ("IDQ.MS_CYCLES", 0x79, 0x30, 1, 0, 0, "Cycles when uops are being delivered to Instruction Decode Queue (IDQ) while the MS is busy"),
    ("IDQ.MS_SWITCHES", 0x79, 0x30, 1, 0, 1, "Switches from DSB or MITE to the MS"),
    ("ICACHE_16B.IFDATA_STALL", 0x80, 0x04, 0, 0, 0, "Cycles where a code fetch is stalled due to an L1 instruction cache miss"),
    ("ICACHE_64B.IFTAG_HIT", 0x83, 0x01, 0, 0, 0, "Instruction fetch tag lookups that hit in the instruction cache (L1I)"),
    ("ICACHE_64B.IFTAG_MISS", 0x83, 0x02, 0, 0, 0, "Instruction fetch tag lookups that miss in the instruction cache (L1I)"),
    ("ICACHE_64B.IFTAG_STALL", 0x83, 0x04, 0, 0, 0, "Cycles where a code fetch is stalled due to L1 instruction cache tag miss"),
    ("ITLB_MISSES.MISS_CAUSES_A_WALK", 0x85, 0x01, 0, 0, 0, "Misses at all Instruction TLB (ITLB) levels that cause page walks"),
    ("ITLB_MISSES.WALK_COMPLETED", 0x85, 0x0E, 0, 0, 0, "Code miss page walks completed (all sizes)"),
    ("ITLB_MISSES.WALK_PENDING", 0x85, 0x10, 0, 0, 0, "Page Miss Handler (PMH) is busy with a page walk for an instruction fetch request"),
    ("ITLB_MISSES.WALK_ACTIVE", 0x85, 0x10, 1, 0, 0, "Cycles when at least one code page walk is active"),
    ("ITLB_MISSES.STLB_HIT", 0x85, 0x20, 0, 0, 0, "Instruction fetch requests that miss the ITLB and hit the STLB"),
    ("ILD_STALL.LCP", 0x87, 0x01, 0, 0, 0, "Stalls caused by changing prefix length of the instruction"),
    ("IDQ_UOPS_NOT_DELIVERED.CORE", 0x9C, 0x01, 0, 0, 0, "Uops not delivered to the RAT per thread while the back end is not stalled"),
    ("IDQ_UOPS_NOT_DELIVERED.CYCLES_0_UOPS_DELIV.CORE", 0x9C, 0x01, 4, 0, 0, "Cycles when no uops are delivered"),
    ("IDQ_UOPS_NOT_DELIVERED.CYCLES_LE_1_UOP_DELIV.CORE", 0x9C, 0x01, 3, 0, 0, "Cycles when at most one uop is delivered"),
    ("IDQ_UOPS_NOT_DELIVERED.CYCLES_LE_3_UOP_DELIV.CORE", 0x9C, 0x01, 1, 0, 0, "Cycles when at most three uops are delivered"),
    ("IDQ_UOPS_NOT_DELIVERED.CYCLES_FE_WAS_OK", 0x9C, 0x01, 1, 1, 0, "Cycles when the front end delivered four uops or the RAT was stalled"),
    ("UOPS_DISPATCHED_PORT.PORT_0", 0xA1, 0x01, 0, 0, 0, "Cycles per thread when uops are executed in port 0"),
    ("UOPS_DISPATCHED_PORT.PORT_1", 0xA1, 0x02, 0, 0, 0, "Cycles per thread when uops are executed in port 1"),
    ("UOPS_DISPATCHED_PORT.PORT_2", 0xA1, 0x04, 0, 0, 0, "Cycles per thread when uops are executed in port 2"),
    ("UOPS_DISPATCHED_PORT.PORT_3", 0xA1, 0x08, 0, 0, 0, "Cycles per thread when uops are executed in port 3"),
    ("UOPS_DISPATCHED_PORT.PORT_4", 0xA1, 0x10, 0, 0, 0, "Cycles per thread when uops are executed in port 4"),
    ("UOPS_DISPATCHED_PORT.PORT_5", 0xA1, 0x20, 0, 0, 0, "Cycles per thread when uops are executed in port 5"),
    ("UOPS_DISPATCHED_PORT.PORT_6", 0xA1, 0x40, 0, 0, 0, "Cycles per thread when uops are executed in port 6"),
    ("UOPS_DISPATCHED_PORT.PORT_7", 0xA1, 0x80, 0, 0, 0, "Cycles per thread when uops are executed in port 7"),
    ("RESOURCE_STALLS.ANY", 0xA2, 0x01, 0, 0, 0, "Resource-related stall cycles"),
    ("RESOURCE_STALLS.SB", 0xA2, 0x08, 0, 0, 0, "Cycles stalled due to no store buffers available"),
    ("CYCLE_ACTIVITY.CYCLES_L2_MISS", 0xA3, 0x01, 1, 0, 0, "Cycles while L2 cache miss demand load is outstanding"),
    ("CYCLE_ACTIVITY.CYCLES_L3_MISS", 0xA3, 0x02, 2, 0, 0, "Cycles while L3 cache miss demand load is outstanding"),
    ("CYCLE_ACTIVITY.STALLS_TOTAL", 0xA3, 0x04, 4, 0, 0, "Total execution stalls"),
    ("CYCLE_ACTIVITY.STALLS_L2_MISS", 0xA3, 0x05, 5, 0, 0, "Execution stalls while L2 cache miss demand load is outstanding"),
    ("CYCLE_ACTIVITY.STALLS_L3_MISS", 0xA3, 0x06, 6, 0, 0, "Execution stalls while L3 cache miss demand load is outstanding"),
    ("CYCLE_ACTIVITY.CYCLES_L1D_MISS", 0xA3, 0x08, 8, 0, 0, "Cycles while L1 cache miss demand load is outstanding"),
    ("CYCLE_ACTIVITY.STALLS_L1D_MISS", 0xA3, 0x0C, 12, 0, 0, "Execution stalls while L1 cache miss demand load is outstanding"),
    ("CYCLE_ACTIVITY.CYCLES_MEM_ANY", 0xA3, 0x10, 16, 0, 0, "Cycles while memory subsystem has an outstanding load"),
    ("CYCLE_ACTIVITY.STALLS_MEM_ANY", 0xA3, 0x14, 20, 0, 0, "Execution stalls while memory subsystem has an outstanding load"),
    ("EXE_ACTIVITY.EXE_BOUND_0_PORTS", 0xA6, 0x01, 0, 0, 0, "Cycles where no uops were executed"),
    ("EXE_ACTIVITY.1_PORTS_UTIL", 0xA6, 0x02, 0, 0, 0, "Cycles total of 1 uop is executed on all ports"),
    ("EXE_ACTIVITY.2_PORTS_UTIL", 0xA6, 0x04, 0, 0, 0, "Cycles total of 2 uops are executed on all ports"),
    ("EXE_ACTIVITY.3_PORTS_UTIL", 0xA6, 0x08, 0, 0, 0, "Cycles total of 3 uops are executed on all ports"),
    ("EXE_ACTIVITY.4_PORTS_UTIL", 0xA6, 0x10, 0, 0, 0, "Cycles total of 4 uops are executed on all ports"),
    ("EXE_ACTIVITY.BOUND_ON_STORES", 0xA6, 0x40, 0, 0, 0, "Cycles where the store buffer was full and no outstanding load"),
    ("LSD.UOPS", 0xA8, 0x01, 0, 0, 0, "Uops delivered by the loop stream detector"),
    ("LSD.CYCLES_ACTIVE", 0xA8, 0x01, 1, 0, 0, "Cycles uops are delivered by the LSD"),
    ("LSD.CYCLES_4_UOPS", 0xA8, 0x01, 4, 0, 0, "Cycles 4 uops are delivered by the LSD"),
    ("DSB2MITE_SWITCHES.PENALTY_CYCLES", 0xAB, 0x02, 0, 0, 0, "DSB-to-MITE switch true penalty cycles"),
    ("ITLB.ITLB_FLUSH", 0xAE, 0x01, 0, 0, 0, "Flushing of the ITLB"),
    ("OFFCORE_REQUESTS.DEMAND_DATA_RD", 0xB0, 0x01, 0, 0, 0, "Demand data read requests sent to uncore"),
    ("OFFCORE_REQUESTS.DEMAND_CODE_RD", 0xB0, 0x02, 0, 0, 0, "Demand code read requests sent to uncore"),
    ("OFFCORE_REQUESTS.DEMAND_RFO", 0xB0, 0x04, 0, 0, 0, "Demand RFO requests sent to uncore"),
    ("OFFCORE_REQUESTS.ALL_DATA_RD", 0xB0, 0x08, 0, 0, 0, "Data read requests sent to uncore"),
    ("OFFCORE_REQUESTS.L3_MISS_DEMAND_DATA_RD", 0xB0, 0x10, 0, 0, 0, "Demand data read requests that missed L3"),
    ("OFFCORE_REQUESTS.ALL_REQUESTS", 0xB0, 0x80, 0, 0, 0, "Requests sent to uncore"),
    ("UOPS_EXECUTED.THREAD", 0xB1, 0x01, 0, 0, 0, "Uops executed on the thread"),
    ("UOPS_EXECUTED.STALL_CYCLES", 0xB1, 0x01, 1, 1, 0, "Cycles where no uops were dispatched"),
    ("UOPS_EXECUTED.CYCLES_GE_1_UOP_EXEC", 0xB1, 0x01, 1, 0, 0, "Cycles with at least 1 uop executed"),
    ("UOPS_EXECUTED.CYCLES_GE_2_UOPS_EXEC", 0xB1, 0x01, 2, 0, 0, "Cycles with at least 2 uops executed"),
    ("UOPS_EXECUTED.CYCLES_GE_3_UOPS_EXEC", 0xB1, 0x01, 3, 0, 0, "Cycles with at least 3 uops executed"),
    ("UOPS_EXECUTED.CYCLES_GE_4_UOPS_EXEC", 0xB1, 0x01, 4, 0, 0, "Cycles with at least 4 uops executed"),
    ("UOPS_EXECUTED.CORE", 0xB1, 0x02, 0, 0, 0, "Uops executed on the core"),
    ("UOPS_EXECUTED.CORE_CYCLES_GE_1", 0xB1, 0x02, 1, 0, 0, "Core cycles with at least 1 uop executed"),
    ("UOPS_EXECUTED.CORE_CYCLES_NONE", 0xB1, 0x02, 1, 1, 0, "Core cycles with no uops executed"),
    ("UOPS_EXECUTED.X87", 0xB1, 0x10, 0, 0, 0, "x87 uops executed"),
    ("OFFCORE_REQUESTS_BUFFER.SQ_FULL", 0xB2, 0x01, 0, 0, 0, "Offcore requests buffer cannot take more entries"),
    ("TLB_FLUSH.DTLB_THREAD", 0xBD, 0x01, 0, 0, 0, "DTLB flush attempts of the thread-specific entries"),
    ("TLB_FLUSH.STLB_ANY", 0xBD, 0x20, 0, 0, 0, "STLB flush attempts"),
    ("INST_RETIRED.ANY_P", 0xC0, 0x00, 0, 0, 0, "Instructions retired"),
    ("INST_RETIRED.PREC_DIST", 0xC0, 0x01, 0, 0, 0, "Precise instruction retired event with reduced skid"),
    ("INST_RETIRED.TOTAL_CYCLES_PS", 0xC0, 0x01, 10, 1, 0, "Cycles using always-true condition applied to the PEBS event"),
    ("OTHER_ASSISTS.ANY", 0xC1, 0x3F, 0, 0, 0, "Microcode assists for events other than FP"),
    ("UOPS_RETIRED.RETIRE_SLOTS", 0xC2, 0x02, 0, 0, 0, "Retirement slots used"),
    ("UOPS_RETIRED.STALL_CYCLES", 0xC2, 0x02, 1, 1, 0, "Cycles without actually retired uops"),
    ("UOPS_RETIRED.TOTAL_CYCLES", 0xC2, 0x02, 10, 1, 0, "Cycles with less than 10 actually retired uops"),
    ("MACHINE_CLEARS.COUNT", 0xC3, 0x01, 1, 0, 1, "Number of machine clears of any type"),
    ("MACHINE_CLEARS.MEMORY_ORDERING", 0xC3, 0x02, 0, 0, 0, "Machine clears due to memory ordering conflicts"),
    ("MACHINE_CLEARS.SMC", 0xC3, 0x04, 0, 0, 0, "Self-modifying code machine clears"),
    ("BR_INST_RETIRED.ALL_BRANCHES", 0xC4, 0x00, 0, 0, 0, "All branch instructions retired"),
    ("BR_INST_RETIRED.CONDITIONAL", 0xC4, 0x01, 0, 0, 0, "Conditional branch instructions retired"),
    ("BR_INST_RETIRED.NEAR_CALL", 0xC4, 0x02, 0, 0, 0, "Direct and indirect near call instructions retired"),
    ("BR_INST_RETIRED.ALL_BRANCHES_PEBS", 0xC4, 0x04, 0, 0, 0, "All branch instructions retired (precise)"),
    ("BR_INST_RETIRED.NEAR_RETURN", 0xC4, 0x08, 0, 0, 0, "Return instructions retired"),
    ("BR_INST_RETIRED.NOT_TAKEN", 0xC4, 0x10, 0, 0, 0, "Not taken branch instructions retired"),
    ("BR_INST_RETIRED.NEAR_TAKEN", 0xC4, 0x20, 0, 0, 0, "Taken branch instructions retired"),
    ("BR_INST_RETIRED.FAR_BRANCH", 0xC4, 0x40, 0, 0, 0, "Far branch instructions retired"),
    ("BR_MISP_RETIRED.ALL_BRANCHES", 0xC5, 0x00, 0, 0, 0, "All mispredicted branch instructions retired"),
    ("BR_MISP_RETIRED.CONDITIONAL", 0xC5, 0x01, 0, 0, 0, "Mispredicted conditional branch instructions retired"),
    ("BR_MISP_RETIRED.NEAR_CALL", 0xC5, 0x02, 0, 0, 0, "Mispredicted direct and indirect near call instructions retired"),
    ("BR_MISP_RETIRED.ALL_BRANCHES_PEBS", 0xC5, 0x04, 0, 0, 0, "Mispredicted branch instructions retired (precise)"),
    ("BR_MISP_RETIRED.NEAR_TAKEN", 0xC5, 0x20, 0, 0, 0, "Mispredicted taken branch instructions retired"),
    ("FP_ARITH_INST_RETIRED.SCALAR_DOUBLE", 0xC7, 0x01, 0, 0, 0, "Scalar double-precision FP instructions retired"),
    ("FP_ARITH_INST_RETIRED.SCALAR_SINGLE", 0xC7, 0x02, 0, 0, 0, "Scalar single-precision FP instructions retired"),
    ("FP_ARITH_INST_RETIRED.128B_PACKED_DOUBLE", 0xC7, 0x04, 0, 0, 0, "128-bit packed double-precision FP instructions retired"),
    ("FP_ARITH_INST_RETIRED.128B_PACKED_SINGLE", 0xC7, 0x08, 0, 0, 0, "128-bit packed single-precision FP instructions retired"),
    ("FP_ARITH_INST_RETIRED.256B_PACKED_DOUBLE", 0xC7, 0x10, 0, 0, 0, "256-bit packed double-precision FP instructions retired"),
    ("FP_ARITH_INST_RETIRED.256B_PACKED_SINGLE", 0xC7, 0x20, 0, 0, 0, "256-bit packed single-precision FP instructions retired"),
    ("HLE_RETIRED.START", 0xC8, 0x01, 0, 0, 0, "Times an HLE execution started"),
    ("HLE_RETIRED.COMMIT", 0xC8, 0x02, 0, 0, 0, "Times an HLE execution successfully committed"),
    ("HLE_RETIRED.ABORTED", 0xC8, 0x04, 0, 0, 0, "Times an HLE execution aborted"),
    ("RTM_RETIRED.START", 0xC9, 0x01, 0, 0, 0, "Times an RTM execution started"),
    ("RTM_RETIRED.COMMIT", 0xC9, 0x02, 0, 0, 0, "Times an RTM execution successfully committed"),
    ("RTM_RETIRED.ABORTED", 0xC9, 0x04, 0, 0, 0, "Times an RTM execution aborted"),
    ("RTM_RETIRED.ABORTED_MEM", 0xC9, 0x08, 0, 0, 0, "RTM aborts due to memory events"),
    ("RTM_RETIRED.ABORTED_TIMER", 0xC9, 0x10, 0, 0, 0, "RTM aborts due to uncommon conditions"),
    ("RTM_RETIRED.ABORTED_UNFRIENDLY", 0xC9, 0x20, 0, 0, 0, "RTM aborts due to unfriendly instructions"),
    ("RTM_RETIRED.ABORTED_MEMTYPE", 0xC9, 0x40, 0, 0, 0, "RTM aborts due to incompatible memory type"),
    ("RTM_RETIRED.ABORTED_EVENTS", 0xC9, 0x80, 0, 0, 0, "RTM aborts due to none of the previous categories"),
    ("FP_ASSIST.ANY", 0xCA, 0x1E, 1, 0, 0, "Cycles with any input or output SSE or x87 FP assist"),
    ("HW_INTERRUPTS.RECEIVED", 0xCB, 0x01, 0, 0, 0, "Hardware interrupts received"),
    ("ROB_MISC_EVENTS.LBR_INSERTS", 0xCC, 0x20, 0, 0, 0, "Increments when an entry is added to the LBR stack"),
    ("MEM_TRANS_RETIRED.LOAD_LATENCY_GT_4", 0xCD, 0x01, 0, 0, 0, "Loads with latency above 4 cycles"),
    ("MEM_INST_RETIRED.STLB_MISS_LOADS", 0xD0, 0x11, 0, 0, 0, "Retired load instructions that miss the STLB"),
    ("MEM_INST_RETIRED.STLB_MISS_STORES", 0xD0, 0x12, 0, 0, 0, "Retired store instructions that miss the STLB"),
    ("MEM_INST_RETIRED.LOCK_LOADS", 0xD0, 0x21, 0, 0, 0, "Retired load instructions with locked access"),
    ("MEM_INST_RETIRED.SPLIT_LOADS", 0xD0, 0x41, 0, 0, 0, "Retired load instructions that split across a cacheline boundary"),
    ("MEM_INST_RETIRED.SPLIT_STORES", 0xD0, 0x42, 0, 0, 0, "Retired store instructions that split across a cacheline boundary"),
    ("MEM_INST_RETIRED.ALL_LOADS", 0xD0, 0x81, 0, 0, 0, "All retired load instructions"),
    ("MEM_INST_RETIRED.ALL_STORES", 0xD0, 0x82, 0, 0, 0, "All retired store instructions"),
    ("MEM_LOAD_RETIRED.L1_HIT", 0xD1, 0x01, 0, 0, 0, "Retired load instructions with L1 cache hits as data sources"),
    ("MEM_LOAD_RETIRED.L2_HIT", 0xD1, 0x02, 0, 0, 0, "Retired load instructions with L2 cache hits as data sources"),
    ("MEM_LOAD_RETIRED.L3_HIT", 0xD1, 0x04, 0, 0, 0, "Retired load instructions with L3 cache hits as data sources"),
    ("MEM_LOAD_RETIRED.L1_MISS", 0xD1, 0x08, 0, 0, 0, "Retired load instructions missed L1 cache as data sources"),
    ("MEM_LOAD_RETIRED.L2_MISS", 0xD1, 0x10, 0, 0, 0, "Retired load instructions missed L2 cache as data sources"),
    ("MEM_LOAD_RETIRED.L3_MISS", 0xD1, 0x20, 0, 0, 0, "Retired load instructions missed L3 cache as data sources"),
    ("MEM_LOAD_RETIRED.FB_HIT", 0xD1, 0x40, 0, 0, 0, "Retired load instructions which missed L1 but hit the fill buffer"),
    ("MEM_LOAD_L3_HIT_RETIRED.XSNP_MISS", 0xD2, 0x01, 0, 0, 0, "L3 hit loads that missed in a cross-core snoop"),
    ("MEM_LOAD_L3_HIT_RETIRED.XSNP_HIT", 0xD2, 0x02, 0, 0, 0, "L3 hit loads that hit in a cross-core snoop"),
    ("MEM_LOAD_L3_HIT_RETIRED.XSNP_HITM", 0xD2, 0x04, 0, 0, 0, "L3 hit loads that hit a modified line in a cross-core snoop"),
    ("MEM_LOAD_L3_HIT_RETIRED.XSNP_NONE", 0xD2, 0x08, 0, 0, 0, "L3 hit loads that required no snoop"),
    ("BACLEARS.ANY", 0xE6, 0x01, 0, 0, 0, "Front-end resteers due to BPU misprediction"),
    ("L2_TRANS.L2_WB", 0xF0, 0x40, 0, 0, 0, "L2 writebacks that access the L2 cache"),
    ("L2_LINES_IN.ALL", 0xF1, 0x07, 0, 0, 0, "L2 cache lines filling L2"),
    ("L2_LINES_OUT.SILENT", 0xF2, 0x01, 0, 0, 0, "Clean L2 cache lines evicted by demand"),
    ("L2_LINES_OUT.NON_SILENT", 0xF2, 0x02, 0, 0, 0, "Modified L2 cache lines evicted by demand"),
    ("SQ_MISC.SPLIT_LOCK", 0xF4, 0x10, 0, 0, 0, "Split locks in the super queue"),
]

AUGMENT_EVENTS = [
    ("BR_MISP_EXEC.ALL_BRANCHES", 0x89, 0xFF, 0, 0, 0, "All near executed branches (not necessarily retired)"),
    ("BR_MISP_EXEC.ALL_CONDITIONAL", 0x89, 0xC1, 0, 0, 0, "Speculative and retired mispredicted macro conditional branches"),
    ("BR_INST_EXEC.NONTAKEN_CONDITIONAL", 0x88, 0x41, 0, 0, 0, "Not taken macro-conditional branches"),
]

# Events the pipeline drives by itself: name -> (structural kind, speculative,
# baseline).
STRUCTURAL = {
    "BR_MISP_EXEC.ALL_BRANCHES": ("branch_mispredict", True, 0),
    "BR_MISP_EXEC.ALL_CONDITIONAL": ("cond_mispredict", True, 0),
    "BR_INST_EXEC.NONTAKEN_CONDITIONAL": ("cond_not_taken", True, 0),
    "INT_MISC.RECOVERY_CYCLES": ("recovery_cycles", True, 2),
    "INT_MISC.CLEAR_RESTEER_CYCLES": ("resteer_cycles", True, 1),
    "ICACHE_64B.IFTAG_HIT": ("fetch_tag_hit", True, 0),
    "ICACHE_64B.IFTAG_STALL": ("fetch_tag_stall", True, 1),
    "RESOURCE_STALLS.ANY": ("resource_stall_cycles", True, 3),
    "INST_RETIRED.ANY": ("instruction", False, 0),
    "INST_RETIRED.ANY_P": ("instruction", False, 0),
    "INST_RETIRED.PREC_DIST": ("instruction", False, 0),
    "CPU_CLK_UNHALTED.THREAD": ("cycles", False, 4),
    "CPU_CLK_UNHALTED.THREAD_P": ("cycles", False, 4),
    "CPU_CLK_UNHALTED.REF_TSC": ("cycles", False, 3),
    "UOPS_ISSUED.ANY": ("uop_issued", False, 0),
    "UOPS_RETIRED.RETIRE_SLOTS": ("uop_issued", False, 0),
    "UOPS_EXECUTED.THREAD": ("uop_issued", False, 0),
    "BR_INST_RETIRED.ALL_BRANCHES": ("branch", False, 0),
    "BR_INST_RETIRED.ALL_BRANCHES_PEBS": ("branch", False, 0),
    "BR_INST_RETIRED.CONDITIONAL": ("cond_branch", False, 0),
    "BR_INST_RETIRED.NOT_TAKEN": ("cond_not_taken", False, 0),
    "BR_INST_RETIRED.NEAR_TAKEN": ("cond_taken", False, 0),
    "BR_MISP_RETIRED.ALL_BRANCHES": ("branch_mispredict", False, 0),
    "BR_MISP_RETIRED.ALL_BRANCHES_PEBS": ("branch_mispredict", False, 0),
    "BR_MISP_RETIRED.CONDITIONAL": ("cond_mispredict", False, 0),
    "BACLEARS.ANY": ("resteer_cycles", False, 0),
    "MEM_INST_RETIRED.ALL_LOADS": ("load", False, 0),
    "MEM_INST_RETIRED.ALL_STORES": ("store", False, 0),
    "MEM_LOAD_RETIRED.L1_HIT": ("l1d_hit", False, 0),
    "MEM_LOAD_RETIRED.L1_MISS": ("l1d_miss", False, 0),
    "L1D.REPLACEMENT": ("l1d_miss", False, 0),
    "L1D_PEND_MISS.PENDING": ("resource_stall_cycles", False, 1),
    "ICACHE_64B.IFTAG_MISS": ("fetch_tag_stall", False, 0),
    "ICACHE_16B.IFDATA_STALL": ("fetch_tag_stall", False, 1),
    "MACHINE_CLEARS.COUNT": ("machine_clear", False, 0),
    "INT_MISC.RECOVERY_CYCLES_ANY": ("recovery_cycles", False, 0),
    "UOPS_RETIRED.TOTAL_CYCLES": ("cycles", False, 2),
    "INST_RETIRED.TOTAL_CYCLES_PS": ("cycles", False, 2),
}

# Speculative events raised only by specific instructions: name -> (number of
# trigger instructions, preferred asm substrings).
SPECULATIVE_TAGGED = {
    "PARTIAL_RAT_STALLS.SCOREBOARD": (3068, []),
    "CYCLE_ACTIVITY.STALLS_MEM_ANY": (1241, ["M8", "M16", "M32", "M64", "M128", "M256"]),
    "CYCLE_ACTIVITY.CYCLES_MEM_ANY": (1199, ["M8", "M16", "M32", "M64", "M128", "M256"]),
    "CYCLE_ACTIVITY.CYCLES_L1D_MISS": (1, ["M256"]),
    "RS_EVENTS.EMPTY_CYCLES": (1136, ["DIV", "SQRT"]),
    "ITLB_MISSES.WALK_PENDING": (462, ["JMP", "CALL"]),
    "ITLB_MISSES.MISS_CAUSES_A_WALK": (42, ["CALL"]),
    "ILD_STALL.LCP": (21, ["I16"]),
    "EXE_ACTIVITY.EXE_BOUND_0_PORTS": (16, ["DIV"]),
    "IDQ.MS_CYCLES": (3, ["CPUID", "XGETBV"]),
    "IDQ.MS_MITE_UOPS": (3, ["CPUID", "XGETBV"]),
    "DTLB_LOAD_MISSES.MISS_CAUSES_A_WALK": (3, ["M64"]),
}
SPECULATIVE_BASELINE = {
    "CYCLE_ACTIVITY.STALLS_MEM_ANY": 2,
    "CYCLE_ACTIVITY.CYCLES_MEM_ANY": 2,
    "CYCLE_ACTIVITY.CYCLES_L1D_MISS": 1,
    "RS_EVENTS.EMPTY_CYCLES": 1,
}

# Retirement-counted events that a subset of instructions raise.
RETIRED_TAGGED = {
    "ARITH.DIVIDER_ACTIVE": ["DIV"],
    "UOPS_ISSUED.VECTOR_WIDTH_MISMATCH": ["XMM"],
    "UOPS_ISSUED.SLOW_LEA": ["LEA"],
    "UOPS_EXECUTED.X87": ["F"],
    "FP_ARITH_INST_RETIRED.SCALAR_DOUBLE": ["SD "],
    "FP_ARITH_INST_RETIRED.SCALAR_SINGLE": ["SS "],
    "FP_ARITH_INST_RETIRED.128B_PACKED_DOUBLE": ["PD (XMM"],
    "FP_ARITH_INST_RETIRED.128B_PACKED_SINGLE": ["PS (XMM"],
    "FP_ARITH_INST_RETIRED.256B_PACKED_DOUBLE": ["PD (YMM"],
    "FP_ARITH_INST_RETIRED.256B_PACKED_SINGLE": ["PS (YMM"],
    "FP_ASSIST.ANY": ["SQRT"],
    "OTHER_ASSISTS.ANY": ["CPUID"],
    "MEM_INST_RETIRED.SPLIT_LOADS": ["M128"],
    "MEM_INST_RETIRED.SPLIT_STORES": ["(M128"],
    "MEM_INST_RETIRED.LOCK_LOADS": ["XCHG"],
    "LD_BLOCKS.STORE_FORWARD": ["(M32"],
    "LD_BLOCKS.NO_SR": ["M256"],
    "LD_BLOCKS_PARTIAL.ADDRESS_ALIAS": ["(M64"],
    "DTLB_STORE_MISSES.MISS_CAUSES_A_WALK": ["(M64"],
    "DTLB_LOAD_MISSES.STLB_HIT": ["M32"],
    "DTLB_STORE_MISSES.STLB_HIT": ["(M32"],
    "ITLB_MISSES.STLB_HIT": ["JMP"],
    "BR_INST_RETIRED.NEAR_CALL": ["CALL"],
    "BR_INST_RETIRED.NEAR_RETURN": ["RET"],
    "BR_MISP_RETIRED.NEAR_CALL": ["CALL"],
    "LSD.UOPS": ["ADD"],
    "LSD.CYCLES_ACTIVE": ["SUB"],
    "DSB2MITE_SWITCHES.PENALTY_CYCLES": ["I32"],
    "IDQ.MITE_UOPS": ["I32"],
    "IDQ.DSB_UOPS": ["R64"],
    "IDQ.MS_UOPS": ["CPUID"],
    "IDQ.MS_SWITCHES": ["XGETBV"],
    "UOPS_DISPATCHED_PORT.PORT_0": ["MUL"],
    "UOPS_DISPATCHED_PORT.PORT_1": ["IMUL"],
    "UOPS_DISPATCHED_PORT.PORT_2": ["(R64, M64)"],
    "UOPS_DISPATCHED_PORT.PORT_3": ["(R32, M32)"],
    "UOPS_DISPATCHED_PORT.PORT_4": ["(M64, R64)"],
    "UOPS_DISPATCHED_PORT.PORT_5": ["SHUF"],
    "UOPS_DISPATCHED_PORT.PORT_6": ["CMOV"],
    "UOPS_DISPATCHED_PORT.PORT_7": ["(M32, R32)"],
    "EXE_ACTIVITY.1_PORTS_UTIL": ["BT"],
    "EXE_ACTIVITY.2_PORTS_UTIL": ["SH"],
    "EXE_ACTIVITY.3_PORTS_UTIL": ["RO"],
    "EXE_ACTIVITY.4_PORTS_UTIL": ["PADD"],
    "EXE_ACTIVITY.BOUND_ON_STORES": ["MOV (M"],
    "RESOURCE_STALLS.SB": ["STOS"],
    "MEM_LOAD_RETIRED.L2_HIT": ["VMOV"],
    "MEM_LOAD_RETIRED.FB_HIT": ["MOVDQ"],
    "MEM_TRANS_RETIRED.LOAD_LATENCY_GT_4": ["(R64, M64)"],
    "MEM_INST_RETIRED.STLB_MISS_LOADS": ["M16"],
    "MEM_INST_RETIRED.STLB_MISS_STORES": ["(M16"],
    "L2_RQSTS.DEMAND_DATA_RD_HIT": ["M128"],
    "L2_RQSTS.ALL_DEMAND_DATA_RD": ["M256"],
    "LONGEST_LAT_CACHE.REFERENCE": ["PREFETCH"],
    "MACHINE_CLEARS.MEMORY_ORDERING": ["FENCE"],
    "MACHINE_CLEARS.SMC": ["CLFLUSH"],
    "UOPS_EXECUTED.CORE": ["VP"],
    "UOPS_RETIRED.STALL_CYCLES": ["PAUSE"],
    "UOPS_ISSUED.STALL_CYCLES": ["XCHG"],
    "ROB_MISC_EVENTS.LBR_INSERTS": ["JMP"],
}

ALLOWED_EXTENSIONS = [
    "BASE", "SSE", "SSE2", "SSE3", "SSSE3", "SSE4", "AVX", "AVX2", "FMA",
    "BMI1", "BMI2", "AES", "PCLMULQDQ", "X87", "MMX", "F16C", "LZCNT",
    "MOVBE", "POPCNT", "ADOX_ADCX", "SGX", "MPX",
]
DENIED_BY_ALLOW = [
    "AVX512EVEX", "AVX512VEX", "XOP", "FMA4", "AMD3DNOW", "VTX", "SMX",
    "AMX", "SSE4a", "TBM", "KEYLOCKER", "CET",
]
DENY_EXTENSIONS = ["SGX", "MPX"]
DENY_SUBSTRINGS = ["LOCK ", "REP ", "REPE ", "REPNE ", "{sae}", "{rn-sae}"]

GPR_FORMS = [
    "(R8, R8)", "(R16, R16)", "(R32, R32)", "(R64, R64)", "(R8, I8)",
    "(R16, I16)", "(R32, I32)", "(R64, I32)", "(R16, I8)", "(R32, I8)",
    "(R64, I8)", "(M8, R8)", "(M16, R16)", "(M32, R32)", "(M64, R64)",
    "(R8, M8)", "(R16, M16)", "(R32, M32)", "(R64, M64)", "(M8, I8)",
    "(M16, I16)", "(M32, I32)", "(M64, I32)", "(AL, I8)", "(AX, I16)",
    "(EAX, I32)", "(RAX, I32)",
]
UNARY_FORMS = ["(R8)", "(R16)", "(R32)", "(R64)", "(M8)", "(M16)", "(M32)", "(M64)"]
SHIFT_FORMS = [
    "(R8, 1)", "(R16, 1)", "(R32, 1)", "(R64, 1)", "(R8, CL)", "(R16, CL)",
    "(R32, CL)", "(R64, CL)", "(R8, I8)", "(R16, I8)", "(R32, I8)",
    "(R64, I8)", "(M8, 1)", "(M16, CL)", "(M32, I8)", "(M64, CL)",
]
SSE_FORMS = ["(XMM, XMM)", "(XMM, M128)", "(XMM, M64)", "(XMM, M32)"]
SSE_IMM_FORMS = ["(XMM, XMM, I8)", "(XMM, M128, I8)"]
AVX_FORMS = [
    "(XMM, XMM, XMM)", "(XMM, XMM, M128)", "(YMM, YMM, YMM)",
    "(YMM, YMM, M256)",
]
AVX512_FORMS = [
    "(ZMM, ZMM, ZMM)", "(ZMM, ZMM, M512)", "(ZMM {K}, ZMM, ZMM)",
    "(ZMM {K}{z}, ZMM, ZMM)", "(XMM {K}, XMM, XMM)", "(YMM {K}, YMM, YMM)",
    "(XMM {K}{z}, XMM, M128)", "(YMM {K}{z}, YMM, M256)",
    "(ZMM, ZMM, M64_1to8)", "(ZMM {K}, ZMM, M32_1to16)",
    "(ZMM, ZMM, ZMM, I8)", "(ZMM {K}, ZMM, M512, I8)",
]

BASE_BINARY = [
    "ADD", "ADC", "SUB", "SBB", "AND", "OR", "XOR", "CMP", "TEST", "MOV",
    "XCHG", "XADD", "CMPXCHG", "IMUL",
]
BASE_UNARY = [
    "INC", "DEC", "NEG", "NOT", "MUL", "DIV", "IDIV", "PUSH", "POP", "BSWAP",
    "SETB", "SETNB", "SETZ", "SETNZ", "SETBE", "SETNBE", "SETS", "SETNS",
    "SETP", "SETNP", "SETL", "SETNL", "SETLE", "SETNLE", "SETO", "SETNO",
    "CALL", "JMP",
]
BASE_SHIFT = ["SHL", "SHR", "SAR", "ROL", "ROR", "RCL", "RCR"]
BASE_BIT = ["BT", "BTS", "BTR", "BTC", "BSF", "BSR", "MOVZX", "MOVSX", "LEA",
            "SHLD", "SHRD"]
BASE_CMOV = ["CMOVB", "CMOVNB", "CMOVZ", "CMOVNZ", "CMOVBE", "CMOVNBE",
             "CMOVS", "CMOVNS", "CMOVP", "CMOVNP", "CMOVL", "CMOVNL",
             "CMOVLE", "CMOVNLE", "CMOVO", "CMOVNO"]
BASE_NULLARY = [
    "NOP", "PAUSE", "LFENCE", "MFENCE", "SFENCE", "CPUID", "RDTSC", "RDTSCP",
    "CLC", "STC", "CMC", "CLD", "STD", "LAHF", "SAHF", "CBW", "CWDE", "CDQE",
    "CWD", "CDQ", "CQO", "XGETBV", "RET", "LEAVE", "MOVSB", "MOVSW", "MOVSD",
    "MOVSQ", "STOSB", "STOSW", "STOSD", "STOSQ", "LODSB", "LODSQ", "SCASB",
    "SCASQ", "CMPSB", "CMPSQ", "CLFLUSH (M8)", "PREFETCHT0 (M8)",
    "PREFETCHT1 (M8)", "PREFETCHNTA (M8)",
]
FP_OPS = ["ADD", "SUB", "MUL", "DIV", "MIN", "MAX", "SQRT", "AND", "ANDN",
          "OR", "XOR", "CMP", "MOVA", "MOVU", "UNPCKL", "UNPCKH", "SHUF",
          "HADD", "HSUB", "ADDSUB", "RCP", "RSQRT", "ROUND", "DP", "BLEND",
          "MOVMSK", "CVT"]
INT_OPS = ["PADDB", "PADDW", "PADDD", "PADDQ", "PSUBB", "PSUBW", "PSUBD",
           "PSUBQ", "PMULLW", "PMULLD", "PMULUDQ", "PMADDWD", "PAND", "PANDN",
           "POR", "PXOR", "PCMPEQB", "PCMPEQW", "PCMPEQD", "PCMPGTB",
           "PCMPGTW", "PCMPGTD", "PMAXUB", "PMINUB", "PMAXSW", "PMINSW",
           "PAVGB", "PAVGW", "PSADBW", "PSHUFB", "PSHUFD", "PSLLW", "PSLLD",
           "PSLLQ", "PSRLW", "PSRLD", "PSRLQ", "PSRAW", "PSRAD", "PUNPCKLBW",
           "PUNPCKHBW", "PACKSSWB", "PACKUSWB", "PABSB", "PABSW", "PSIGNB",
           "PHADDW", "PHADDD", "PMULHRSW", "PALIGNR", "PBLENDW", "PMOVZXBW",
           "PMOVSXBW", "PTEST", "MOVDQA", "MOVDQU", "PEXTRB", "PINSRB",
           "PMAXSB", "PMINSB", "PMAXUD", "PMINUD", "PMAXSD", "PMINSD",
           "PMAXUW", "PMINUW", "PCMPEQQ", "PCMPGTQ", "PACKUSDW", "PMULDQ",
           "PEXTRD", "PEXTRQ", "PINSRD", "PINSRQ", "PMOVZXWD", "PMOVSXWD",
           "PMOVZXDQ", "PMOVSXDQ", "PHSUBW", "PHSUBD", "PSIGNW", "PSIGND",
           "PABSD"]
X87_OPS = ["FADD", "FSUB", "FMUL", "FDIV", "FSUBR", "FDIVR", "FLD", "FST",
           "FSTP", "FCOM", "FCOMP", "FUCOM", "FXCH", "FABS", "FCHS", "FSQRT",
           "FSIN", "FCOS", "FPTAN", "FPATAN", "FILD", "FIST", "FISTP", "FLDZ",
           "FLD1", "FRNDINT", "FSCALE", "FXTRACT", "FPREM", "FCMOVB"]
X87_FORMS = ["(ST(0), ST(i))", "(ST(i), ST(0))", "(M32)", "(M64)", "(M80)",
             "(ST(i))", ""]
MMX_FORMS = ["(MM, MM)", "(MM, M64)"]


def gpr_candidates():
    out = []
    for m in BASE_BINARY:
        out += [(f"{m} {f}", "BASE") for f in GPR_FORMS]
    for m in BASE_UNARY:
        out += [(f"{m} {f}", "BASE") for f in UNARY_FORMS]
    for m in BASE_SHIFT:
        out += [(f"{m} {f}", "BASE") for f in SHIFT_FORMS]
    for m in BASE_BIT:
        out += [(f"{m} {f}", "BASE") for f in GPR_FORMS[:4] + GPR_FORMS[15:19]]
    for m in BASE_CMOV:
        out += [(f"{m} {f}", "BASE") for f in GPR_FORMS[1:4] + GPR_FORMS[16:19]]
    out += [(m, "BASE") for m in BASE_NULLARY]
    for m in ["ANDN", "BEXTR", "BLSI", "BLSMSK", "BLSR", "TZCNT"]:
        out += [(f"{m} {f}", "BMI1") for f in ["(R32, R32)", "(R64, R64)", "(R32, M32)", "(R64, M64)"]]
    for m in ["BZHI", "MULX", "PDEP", "PEXT", "RORX", "SARX", "SHLX", "SHRX"]:
        out += [(f"{m} {f}", "BMI2") for f in ["(R32, R32, R32)", "(R64, R64, R64)", "(R32, M32, R32)", "(R64, M64, R64)"]]
    out += [(f"LZCNT {f}", "LZCNT") for f in ["(R16, R16)", "(R32, R32)", "(R64, R64)", "(R64, M64)"]]
    out += [(f"POPCNT {f}", "POPCNT") for f in ["(R16, R16)", "(R32, R32)", "(R64, R64)", "(R64, M64)"]]
    out += [(f"MOVBE {f}", "MOVBE") for f in ["(R16, M16)", "(R32, M32)", "(R64, M64)", "(M64, R64)"]]
    out += [(f"{m} {f}", "ADOX_ADCX") for m in ["ADCX", "ADOX"] for f in ["(R32, R32)", "(R64, R64)", "(R64, M64)"]]
    return out


def vector_candidates():
    out = []
    for op in FP_OPS:
        for suffix, ext in [("PS", "SSE"), ("PD", "SSE2"), ("SS", "SSE"), ("SD", "SSE2")]:
            out += [(f"{op}{suffix} {f}", ext) for f in SSE_FORMS]
            out += [(f"V{op}{suffix} {f}", "AVX") for f in AVX_FORMS]
    for op in INT_OPS:
        ext = "SSSE3" if op.startswith(("PSHUFB", "PABS", "PSIGN", "PHADD", "PMULHRSW", "PALIGNR")) else (
            "SSE4" if op.startswith(("PMULLD", "PBLEND", "PMOV", "PTEST", "PEXTR", "PINSR")) else "SSE2")
        out += [(f"{op} {f}", ext) for f in SSE_FORMS[:2] + SSE_IMM_FORMS[:1]]
        out += [(f"V{op} {f}", "AVX2" if "YMM" in f else "AVX") for f in AVX_FORMS]
        out += [(f"{op} {f}", "MMX") for f in MMX_FORMS]
    for op in ["VFMADD132", "VFMADD213", "VFMADD231", "VFMSUB132", "VFMSUB213",
               "VFMSUB231", "VFNMADD132", "VFNMADD213", "VFNMADD231",
               "VFNMSUB132", "VFNMSUB213", "VFNMSUB231"]:
        for suffix in ["PS", "PD", "SS", "SD"]:
            out += [(f"{op}{suffix} {f}", "FMA") for f in AVX_FORMS]
    for op in ["AESENC", "AESENCLAST", "AESDEC", "AESDECLAST", "AESIMC"]:
        out += [(f"{op} {f}", "AES") for f in SSE_FORMS[:2]]
        out += [(f"V{op} {f}", "AES") for f in AVX_FORMS[:2]]
    out += [(f"PCLMULQDQ {f}", "PCLMULQDQ") for f in SSE_IMM_FORMS]
    out += [(f"VCVTPH2PS {f}", "F16C") for f in ["(XMM, XMM)", "(YMM, XMM)", "(YMM, M128)"]]
    out += [(f"VCVTPS2PH {f}", "F16C") for f in ["(XMM, XMM, I8)", "(XMM, YMM, I8)", "(M128, YMM, I8)"]]
    for op in ["MOVDDUP", "MOVSHDUP", "MOVSLDUP", "LDDQU"]:
        out += [(f"{op} {f}", "SSE3") for f in SSE_FORMS[:2]]
    for op in X87_OPS:
        out += [(f"{op} {f}".strip(), "X87") for f in X87_FORMS]
    return out


def rejected_candidates():
    out = []
    for op in FP_OPS + INT_OPS:
        for suffix in (["PS", "PD", "SS", "SD"] if op in FP_OPS else [""]):
            for f in AVX512_FORMS:
                out.append((f"V{op}{suffix} {f}", "AVX512EVEX"))
                out.append((f"V{op}{suffix} {f} {{sae}}", "AVX512EVEX"))
            for f in AVX_FORMS:
                out.append((f"V{op}{suffix} {f} ", "AVX512VEX"))
    for op in ["VPERMIL2PS", "VPERMIL2PD", "VPCMOV", "VPROTB", "VPROTW",
               "VPROTD", "VPROTQ", "VPSHAB", "VPSHAW", "VPSHAD", "VPSHAQ",
               "VPMACSWW", "VPMACSDD", "VPHADDBW", "VPHADDWD", "VPCOMB",
               "VPCOMW", "VPCOMD", "VPCOMQ", "VFRCZPS", "VFRCZPD"]:
        out += [(f"{op} {f}", "XOP") for f in AVX_FORMS]
    for op in ["VFMADDPS", "VFMADDPD", "VFMSUBPS", "VFMSUBPD", "VFNMADDPS",
               "VFNMADDPD", "VFMADDSUBPS", "VFMADDSUBPD"]:
        out += [(f"{op} {f}", "FMA4") for f in AVX_FORMS]
    for op in ["PFADD", "PFSUB", "PFMUL", "PFMAX", "PFMIN", "PFRCP", "PI2FD",
               "PF2ID", "PAVGUSB", "PMULHRW"]:
        out += [(f"{op} {f}", "AMD3DNOW") for f in MMX_FORMS]
    for op in ["VMXON", "VMXOFF", "VMLAUNCH", "VMRESUME", "VMREAD", "VMWRITE",
               "VMCALL", "VMPTRLD", "VMCLEAR", "INVEPT", "INVVPID"]:
        out += [(f"{op} {f}", "VTX") for f in ["(M64)", "(R64, R64)", ""]]
    for op in ["ENCLS", "ENCLU", "ENCLV"]:
        out += [(f"{op} {f}".strip(), "SGX") for f in ["", "(EAX)", "(RAX, RBX)"]]
    for op in ["BNDMK", "BNDCL", "BNDCU", "BNDCN", "BNDMOV", "BNDLDX", "BNDSTX"]:
        out += [(f"{op} {f}", "MPX") for f in ["(BND, M64)", "(BND, R64)", "(BND, BND)", "(M64, BND)"]]
    for op in ["LDTILECFG", "STTILECFG", "TILELOADD", "TILESTORED", "TDPBSSD",
               "TDPBUSD", "TILEZERO"]:
        out += [(f"{op} {f}", "AMX") for f in ["(M512)", "(TMM, TMM, TMM)", "(TMM)"]]
    for op in ["EXTRQ", "INSERTQ", "MOVNTSS", "MOVNTSD"]:
        out += [(f"{op} {f}", "SSE4a") for f in ["(XMM, XMM)", "(XMM, I8, I8)", "(M32, XMM)"]]
    for op in ["GETSEC"]:
        out += [(op, "SMX")]
    for op in ["BEXTR_XOP", "BLCFILL", "BLCI", "BLCIC", "BLCMSK", "BLCS",
               "BLSFILL", "BLSIC", "T1MSKC", "TZMSK"]:
        out += [(f"{op} {f}", "TBM") for f in ["(R32, R32)", "(R64, R64)", "(R64, M64)"]]
    for op in ["AESENC128KL", "AESDEC128KL", "ENCODEKEY128", "LOADIWKEY"]:
        out += [(f"{op} {f}", "KEYLOCKER") for f in ["(XMM, M384)", "(R32, R32)"]]
    for op in ["ENDBR64", "ENDBR32", "INCSSPQ", "RDSSPQ", "SAVEPREVSSP", "WRSSQ"]:
        out += [(f"{op} {f}".strip(), "CET") for f in ["", "(R64)", "(M64, R64)"]]
    # Allowed extensions, rejected by prefix.
    for m in BASE_BINARY + BASE_UNARY + BASE_SHIFT + BASE_BIT:
        for f in GPR_FORMS[11:15] + GPR_FORMS[19:23] + UNARY_FORMS[4:]:
            out.append((f"LOCK {m} {f}", "BASE"))
    for m in ["MOVSB", "MOVSW", "MOVSD", "MOVSQ", "STOSB", "STOSW", "STOSD",
              "STOSQ", "LODSB", "LODSW", "LODSD", "LODSQ", "INSB", "OUTSB"]:
        out += [(f"REP {m}", "BASE"), (f"REP {m} (M8)", "BASE")]
    for m in ["SCASB", "SCASW", "SCASD", "SCASQ", "CMPSB", "CMPSW", "CMPSD", "CMPSQ"]:
        out += [(f"REPE {m}", "BASE"), (f"REPNE {m}", "BASE"),
                (f"REPE {m} (M8)", "BASE"), (f"REPNE {m} (M8)", "BASE")]
    return out


def choose(rng, pool, n, prefer):
    preferred = [x for x in pool if any(p in x for p in prefer)]
    rest = [x for x in pool if x not in set(preferred)]
    rng.shuffle(preferred)
    rng.shuffle(rest)
    picked = (preferred + rest)[:n]
    return sorted(picked)


def make_instructions(rng):
    accepted = sorted(set(gpr_candidates() + vector_candidates()))
    for asm, ext in accepted:
        assert ext in ALLOWED_EXTENSIONS and ext not in DENY_EXTENSIONS, asm
        assert not any(s in asm for s in DENY_SUBSTRINGS), asm
    rejected = sorted(set(rejected_candidates()))
    n_keep, n_dupes, n_total = 3069, 24, 14546
    assert len(accepted) >= n_keep - n_dupes, len(accepted)
    rng.shuffle(accepted)
    keep = accepted[: n_keep - n_dupes]
    dupes = rng.sample(keep, n_dupes)
    n_reject = n_total - n_keep
    # Rejections are recycled with distinct encodings when the pool is short.
    rejects = []
    k = 0
    while len(rejects) < n_reject:
        asm, ext = rejected[k % len(rejected)]
        rejects.append((asm, ext, k // len(rejected)))
        k += 1
    records = [(a, e, 0) for a, e in keep] + [(a, e, 1) for a, e in dupes] + rejects
    records.sort(key=lambda r: (r[0], r[1], r[2]))
    assert len(records) == n_total
    return records


def survivor_ids(records):
    seen = {}
    ids = []
    for asm, ext, _ in records:
        if ext not in ALLOWED_EXTENSIONS or ext in DENY_EXTENSIONS:
            continue
        if any(s in asm for s in DENY_SUBSTRINGS):
            continue
        seen[asm] = seen.get(asm, 0) + 1
        ids.append(asm if seen[asm] == 1 else f"{asm} #{seen[asm]}")
    return ids


def write_xml(path, records, rng):
    categories = ["BINARY", "LOGICAL", "SHIFT", "DATAXFER", "SSE", "AVX",
                  "AVX2", "X87_ALU", "MISC", "BITBYTE", "CMOV", "STRINGOP"]
    lines = ['<?xml version="1.0" encoding="UTF-8"?>',
             '<root date="2026-01-01" version="sample-1">']
    for i, (asm, ext, variant) in enumerate(records):
        iclass = asm.replace("LOCK ", "").replace("REP ", "").split(" ")[0]
        iform = f"{iclass}_{variant}_{i:05d}"
        attrs = {
            "asm": asm,
            "category": categories[i % len(categories)],
            "extension": ext,
            "iclass": iclass,
            "iform": iform,
            "isa-set": ext if ext != "BASE" else "I86",
            "string": f"{iclass}_{i}",
        }
        attr_text = " ".join(f"{k}={quoteattr(v)}" for k, v in attrs.items())
        ops = asm[asm.find("(") + 1: asm.rfind(")")] if "(" in asm else ""
        lines.append(f"  <instruction {attr_text}>")
        for idx, op in enumerate(o.strip() for o in ops.split(",") if o.strip()):
            kind = "mem" if op.startswith("M") else ("imm" if op.startswith("I") else "reg")
            lines.append(f'    <operand idx="{idx + 1}" type={quoteattr(kind)}>{op}</operand>')
        lat = rng.randint(1, 6)
        lines.append(f'    <architecture name="SKL"><measurement TP="{lat / 2:.2f}" uops="{rng.randint(1, 4)}"/></architecture>')
        lines.append("  </instruction>")
    lines.append("</root>")
    path.write_text("\n".join(lines) + "\n")


def event_record(e, ids_by_event, augment=False):
    name, code, umask, cmask, inv, edge, desc = e
    rec = {
        "name": name,
        "category": name.split(".")[0],
        "event_code": f"0x{code:02X}",
        "umask": f"0x{umask:02X}",
        "description": desc,
    }
    if cmask:
        rec["counter_mask"] = cmask
    if inv:
        rec["invert"] = True
    if edge:
        rec["edge_detect"] = True
    if name in STRUCTURAL:
        kind, spec, base = STRUCTURAL[name]
        rec["trigger"] = {"structural": kind}
        rec["persistence"] = "SPECULATIVE_COUNTED" if spec else "RETIREMENT_COUNTED"
        if base:
            rec["baseline"] = base
    elif name in ids_by_event:
        rec["trigger"] = {"instructions": ids_by_event[name]}
        rec["persistence"] = ("SPECULATIVE_COUNTED" if name in SPECULATIVE_TAGGED
                              else "RETIREMENT_COUNTED")
        if name in SPECULATIVE_BASELINE:
            rec["baseline"] = SPECULATIVE_BASELINE[name]
    else:
        rec["trigger"] = {"structural": "unmodeled"}
        rec["persistence"] = "RETIREMENT_COUNTED"
    return rec


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "data"))
    args = parser.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    rng = random.Random(SEED)

    records = make_instructions(rng)
    ids = survivor_ids(records)
    assert len(ids) == 3069 and len(set(ids)) == 3069
    write_xml(out / "instructions_sample.xml", records, rng)

    ids_by_event = {}
    for name, (n, prefer) in SPECULATIVE_TAGGED.items():
        ids_by_event[name] = choose(rng, ids, n, prefer)
    for name, prefer in RETIRED_TAGGED.items():
        ids_by_event[name] = choose(rng, ids, rng.randint(4, 60), prefer)

    assert len(BASE_EVENTS) == 214, len(BASE_EVENTS)
    base = [event_record(e, ids_by_event) for e in BASE_EVENTS]
    augment = [event_record(e, ids_by_event, True) for e in AUGMENT_EVENTS]
    spec = [r["name"] for r in base + augment if r["persistence"] == "SPECULATIVE_COUNTED"]
    assert len(spec) == 20, spec
    (out / "skylake_sample.json").write_text(json.dumps(base, indent=1) + "\n")
    (out / "skylake_augment.json").write_text(json.dumps(augment, indent=1) + "\n")

    (out / "instruction_filter.json").write_text(json.dumps({
        "comment": "Stand-in for compile-and-run screening on the target machine",
        "allow_extensions": ALLOWED_EXTENSIONS,
        "deny_extensions": DENY_EXTENSIONS,
        "deny_asm_substrings": DENY_SUBSTRINGS,
    }, indent=1) + "\n")

    (out / "mapping_example.json").write_text(json.dumps({
        "NOP": [],
        "VADDPS (YMM, YMM, YMM)": [["FP_ARITH_INST_RETIRED.256B_PACKED_SINGLE", 1]],
        "DIV (R64)": [["ARITH.DIVIDER_ACTIVE", 1], ["RS_EVENTS.EMPTY_CYCLES", 1]],
    }, indent=1) + "\n")

    print(f"instructions: {len(records)} raw, {len(ids)} accepted")
    print(f"events: {len(base)} base + {len(augment)} augment, {len(spec)} speculative")


if __name__ == "__main__":
    main()
