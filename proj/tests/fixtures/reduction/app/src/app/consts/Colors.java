// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0
// Generated by gen_reduction.py; do not edit.
package app.consts;

public class Colors {
  public static final int ALPHA_COLOR = 1;
  public static final int BRAVO_COLOR = 2;
  public static final int CEDAR_COLOR = 3;
  public static final int DELTA_COLOR = 4;
  public static final int EMBER_COLOR = 5;
  public static final int FJORD_COLOR = 6;
  public static final int GAMMA_COLOR = 7;
  public static final int HAZEL_COLOR = 8;
  public static final int IVORY_COLOR = 9;
  public static final int JADE_COLOR = 10;
  public static final int KAPPA_COLOR = 11;
  public static final int LUNAR_COLOR = 12;
  public static final int MAPLE_COLOR = 13;
  public static final int NOBLE_COLOR = 14;
  public static final int OMEGA_COLOR = 15;
  public static final int PRISM_COLOR = 16;
  public static final int QUARTZ_COLOR = 17;
  public static final int RAVEN_COLOR = 18;
  public static final int SIGMA_COLOR = 19;
  public static final int TANGO_COLOR = 20;
  public static final int UMBRA_COLOR = 21;
  public static final int VELVET_COLOR = 22;
  public static final int WILLOW_COLOR = 23;
  public static final int XENON_COLOR = 24;
  public static final int YONDER_COLOR = 25;
  public static final int ZEPHYR_COLOR = 26;
  public static final int AMBER_COLOR = 27;
  public static final int BASALT_COLOR = 28;
  public static final int COBALT_COLOR = 29;
  public static final int DUNE_COLOR = 30;
  public static final int ECHO_COLOR = 31;
  public static final int FLINT_COLOR = 32;
  public static final int GROVE_COLOR = 33;
  public static final int HARBOR_COLOR = 34;
  public static final int INDIGO_COLOR = 35;
  public static final int JUNIPER_COLOR = 36;
  public static final int KESTREL_COLOR = 37;
  public static final int LAGOON_COLOR = 38;
  public static final int MESA_COLOR = 39;
  public static final int NECTAR_COLOR = 40;
  public static final int ONYX_COLOR = 41;
  public static final int PEBBLE_COLOR = 42;
  public static final int QUILL_COLOR = 43;
  public static final int RIDGE_COLOR = 44;
  public static final int SPRUCE_COLOR = 45;
  public static final int THISTLE_COLOR = 46;
  public static final int UPLAND_COLOR = 47;
  public static final int VALE_COLOR = 48;
  public static final int WREN_COLOR = 49;
  public static final int YARROW_COLOR = 50;
  public static final int ZINC_COLOR = 51;
  public static final int ASPEN_COLOR = 52;
  public static final int BIRCH_COLOR = 53;
  public static final int CORAL_COLOR = 54;
  public static final int DAWN_COLOR = 55;
  public static final int ELM_COLOR = 56;
  public static final int FERN_COLOR = 57;
  public static final int GLADE_COLOR = 58;
  public static final int HERON_COLOR = 59;
  public static final int IRIS_COLOR = 60;
}
