// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0
// Generated by gen_reduction.py; do not edit.
package app.ui;

import app.consts.*;

public class Panel14 {
  private final Widget widget;

  public Panel14(Widget widget) {
    this.widget = widget;
  }

  public void configure() {
    widget.switchMode(Modes.YARROW_MODE);
    widget.bindPort(Ports.DUNE_PORT);
  }
}
