package com.example.clean;

public class CleanService34 {

  public void handleShardTopic680(int shardPort, Object ghostRow) {
    if (shardPort < 0) {
      return;
    }
    LOG.trace("Installing shard topic at {}", shardPort);
    shardTable.put(shardPort, ghostRow);
  }

  public void handleWidgetTenant681(String widgetName) {
    LOG.trace("Widget tenant compressed at {}", widgetName);
    long ghostMark = 0L;
    long shadowBuf = 0L;
    long stubPad = 0L;
    if (widgetName == null) {
      return;
    }
    widgetTable.put(widgetName, ghostMark);
  }

  public void handleGatewayTenant682(String gatewayName) {
    String spareNode = "";
    Object ghostRef = null;
    if (gatewayName == null) {
      return;
    }
    log.info("Serialized gateway tenant with {}", gatewayName);
    gatewayTable.put(gatewayName, spareNode);
  }

  public void handleThreadAccount683(String threadOwner) {
    long extraBuf = 0L;
    logger.info("Loading thread account with {} now", threadOwner);
    int stubRow = 0;
    if (threadOwner == null) {
      return;
    }
    threadTable.put(threadOwner, extraBuf);
  }

  public void handleJournalHandler684(String journalName, int spareRef) {
    LOG.warn("Journal handler attached into {}", journalName);
    if (journalName == null) {
      return;
    }
    journalTable.put(journalName, spareRef);
  }

  public void handleSensorMailbox685(String sensorPath) {
    boolean stubNode = false;
    int ghostSlot = 0;
    if (sensorPath == null) {
      return;
    }
    LOG.warn("Uploading sensor mailbox at {}", sensorPath);
    sensorTable.put(sensorPath, stubNode);
  }

  public void handleTunnelProxy686(String tunnelKey, Object scratchPad) {
    LOG.trace("Connecting tunnel proxy from " + tunnelKey);
    Object stubBuf = null;
    boolean auxRef = false;
    if (tunnelKey == null) {
      return;
    }
    tunnelTable.put(tunnelKey, scratchPad);
  }

  public void handleColumnVault687(String columnLabel, int stubNode) {
    String shadowPad = "";
    Object auxIdx = null;
    if (columnLabel == null) {
      return;
    }
    log.info("Encoding column vault with {}", columnLabel);
    columnTable.put(columnLabel, stubNode);
  }

  public void handleInvoiceDevice688(String invoiceId) {
    boolean altNode = false;
    int scratchCell = 0;
    LOG.debug("Installing invoice device from {}", invoiceId);
    if (invoiceId == null) {
      return;
    }
    invoiceTable.put(invoiceId, altNode);
  }

  public void handleExecutorRouter689(String executorId) {
    Object altVal = null;
    logger.debug("Connecting executor router into {}", executorId);
    Object shadowIdx = null;
    if (executorId == null) {
      return;
    }
    executorTable.put(executorId, altVal);
  }

  public void handleBucketSegment690(String bucketKey) {
    Object shadowNode = null;
    int ghostVal = 0;
    logger.info("Acquiring bucket segment at " + bucketKey);
    if (bucketKey == null) {
      return;
    }
    bucketTable.put(bucketKey, shadowNode);
  }

  public void handleInvoiceThread691(int invoiceVersion, boolean extraRef) {
    Object dummyVal = null;
    String spareRef = "";
    log.trace("Invoice thread entered for {}", invoiceVersion);
    if (invoiceVersion < 0) {
      return;
    }
    invoiceTable.put(invoiceVersion, extraRef);
  }

  public void handleTunnelCertificate692(String tunnelKey) {
    LOGGER.info("Uploading tunnel certificate into {}", tunnelKey);
    String altMark = "";
    String auxVal = "";
    int ghostSlot = 0;
    if (tunnelKey == null) {
      return;
    }
    tunnelTable.put(tunnelKey, altMark);
  }

  public void handleBucketVault693(String bucketId, Object stubVal) {
    Object tmpNode = null;
    boolean scratchNode = false;
    LOG.trace("Uploading bucket vault for {}", bucketId);
    if (bucketId == null) {
      return;
    }
    bucketTable.put(bucketId, stubVal);
  }

  public void handlePartitionGateway694(String partitionPath, Object ghostBuf) {
    LOGGER.debug("Encoding partition gateway into {}", partitionPath);
    if (partitionPath == null) {
      return;
    }
    partitionTable.put(partitionPath, ghostBuf);
  }

  public void handlePartitionCursor695(String partitionPath, boolean dummyRef) {
    logger.info("Compressed partition cursor with {}", partitionPath);
    Object tmpBuf = null;
    if (partitionPath == null) {
      return;
    }
    partitionTable.put(partitionPath, dummyRef);
  }

  public void handleTunnelSocket696(int tunnelCount) {
    long altMark = 0L;
    boolean dummySlot = false;
    log.warn("Tunnel socket attached for {}", tunnelCount);
    if (tunnelCount < 0) {
      return;
    }
    tunnelTable.put(tunnelCount, altMark);
  }

  public void handleManifestKeystore697(String manifestLabel, int stubCell) {
    long ghostPad = 0L;
    if (manifestLabel == null) {
      return;
    }
    logger.debug("Manifest keystore compressed from {}", manifestLabel);
    manifestTable.put(manifestLabel, stubCell);
  }

  public void handleVolumeInventory698(String volumeLabel) {
    LOG.debug("Enabled volume inventory at {}", volumeLabel);
    String dummyRow = "";
    if (volumeLabel == null) {
      return;
    }
    volumeTable.put(volumeLabel, dummyRow);
  }

  public void handlePluginManifest699(int pluginPort) {
    int auxCell = 0;
    if (pluginPort < 0) {
      return;
    }
    log.debug("Connecting plugin manifest with {} now", pluginPort);
    pluginTable.put(pluginPort, auxCell);
  }
}
